#pragma once

// Per-document evaluation of an expanded inference graph: memoized post-order
// propagation of truth values from terminals to the root, with short-circuit
// pruning and a replayable trace.
//
// Pruning has two tiers.  Exact short-circuits (conjunction hits bottom,
// disjunction/combination saturates at rank 1) never change any value.
// Threshold pruning stops a conjunction once no completion can reach rank
// theta; it may change the root value of sub-threshold documents, so it is
// applied only where the calculus vouches for the bound (theta_prunable) and
// no negation sits above the node.  Ranking re-evaluates exactly any document
// whose theta-pruned result still clears the threshold, which keeps retrieved
// sets and retrieved values identical to unpruned evaluation.

#include <optional>
#include <string>
#include <vector>

#include "evret/calculus.hpp"
#include "evret/graph.hpp"

namespace evret {

struct TraceRecord {
    int node = 0;
    std::string kind;   // concept | rule | and | or | not | terminal
    std::string label;  // name or pattern; empty for connectives
    std::string op;     // e.g. "match", "conjoin/godel", "detach/frechet!inconsistent"
    std::vector<TruthValue> inputs;
    std::optional<TruthValue> output;  // absent for pruned-skip stubs
    bool pruned = false;
    std::vector<std::string> actions;  // fired action messages
    std::vector<int> children;         // consumed child node ids, in order
};

struct EvaluationTrace {
    std::string doc_id;
    std::string calculus;
    std::string goal;
    double theta = 0.0;
    std::vector<TraceRecord> records;  // post-order; root record last
};

struct EvalOptions {
    double theta = 0.0;
    bool prune = true;        // master switch for all short-circuits
    bool theta_prune = true;  // threshold tier (requires prune)
    std::string doc_id;
    bool echo_actions = false;  // also print fired actions to stderr
};

struct EvalResult {
    TruthValue root;
    EvaluationTrace trace;
    bool theta_pruned = false;  // a threshold prune fired somewhere
    bool inconsistent = false;  // a detachment was downgraded to unknown
};

// Weight per rule-node id (other slots unused).  Wraps CoercionError with the
// rule name.
std::vector<TruthValue> coerce_weights(const InferenceGraph& g, const Calculus& calc,
                                       const TermDictionary* dict, bool defuzzify);

// terminal_values: value per terminal-node id (other slots ignored).
EvalResult evaluate(const InferenceGraph& g, const std::vector<TruthValue>& terminal_values,
                    const Calculus& calc, const std::vector<TruthValue>& weights,
                    const EvalOptions& opt);

// Re-applies every record's operator to its recorded inputs; returns false
// and a description on the first record whose output does not match exactly.
bool replay_trace(const EvaluationTrace& t, const Calculus& calc, std::string* why);

// Derivation rendering from the trace alone.  node: graph node id, or
// nullopt for the root.  Throws UnknownNodeError.
std::string explain(const EvaluationTrace& t, std::optional<int> node);

}  // namespace evret
