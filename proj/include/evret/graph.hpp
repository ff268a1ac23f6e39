#pragma once

// Backward inference graph: a validated rulebase is expanded once into a DAG
// rooted at the goal concept, with one node per distinct concept, terminal
// pattern, and rule (connectives get one node per occurrence).  The graph is
// immutable after expansion and shared across document evaluations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evret/calculus.hpp"
#include "evret/rules.hpp"

namespace evret {

struct GraphNode {
    enum class Kind { Concept, Rule, And, Or, Not, Terminal };
    int id = 0;
    Kind kind = Kind::Concept;
    std::string label;  // concept name, rule name, or terminal pattern
    std::vector<int> kids;
    std::vector<int> parents;

    // Rule nodes only:
    RuleKind rule_kind = RuleKind::Implies;
    WeightLiteral weight = 0.0;
    std::string action;
    int rule_index = -1;  // source order

    // True when no root-to-node path passes through a Not node; threshold
    // pruning below this node is then sound (see evaluate()).
    bool monotone_ctx = true;
};

const char* kind_name(GraphNode::Kind k);

struct InferenceGraph {
    std::vector<GraphNode> nodes;  // id == index
    int root = 0;
    std::optional<double> threshold;  // rulebase-wide default
    std::map<std::string, int> concept_ids;
    std::map<std::string, int> terminal_ids;
    std::map<std::string, int> rule_ids;
    std::vector<int> topo;  // children before parents

    const GraphNode& at(int id) const { return nodes[id]; }
};

// Requires a rulebase that passed validate(rb, goal).
InferenceGraph expand(const Rulebase& rb, const std::string& goal);

// Distinct nodes reachable from start, start included.
int reachable_count(const InferenceGraph& g, int start);

// Evidence rules first (source order), then implies rules by ascending
// subgraph size, ties by source order.  expand() already applies this to
// every concept node's child list.
std::vector<int> order_children(const InferenceGraph& g, int concept_id);

struct GraphStats {
    int concepts = 0, rules = 0, ands = 0, ors = 0, nots = 0, terminals = 0;
    int arcs = 0;
    int total() const { return concepts + rules + ands + ors + nots + terminals; }
};

GraphStats graph_stats(const InferenceGraph& g);

// calc may be null: node labels then omit operator names.
std::string to_dot(const InferenceGraph& g, const Calculus* calc);

}  // namespace evret
