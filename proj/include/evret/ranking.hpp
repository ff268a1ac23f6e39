#pragma once

// Corpus-wide ranking: evaluates every document against one expanded graph
// and sorts by (rank key desc, secondary key desc, id asc).  Documents are
// independent, so the evaluation loop runs under OpenMP when available.

#include <string>
#include <vector>

#include "evret/corpus.hpp"
#include "evret/evaluate.hpp"

namespace evret {

struct RankedDoc {
    std::string id;
    TruthValue value;
    double key = 0.0;        // primary rank key
    double secondary = 0.0;  // tie-break key
    bool retrieved = false;  // key >= theta
    bool inconsistent = false;
};

struct RankedResult {
    std::string calculus;
    double theta = 0.0;
    std::vector<RankedDoc> docs;  // sorted
    std::vector<std::string> warnings;

    std::vector<std::string> retrieved_ids() const;
};

struct RankOptions {
    double theta = 0.0;
    bool prune = true;
    AbsentPolicy absent = AbsentPolicy::Closed;
    const TermDictionary* dict = nullptr;
    bool defuzzify = false;
    bool echo_actions = false;
};

RankedResult rank(const Corpus& corpus, const InferenceGraph& g, const Calculus& calc,
                  const RankOptions& opt);

// Single-document evaluation with the same weight coercion and re-evaluation
// policy as rank(); used for --explain.
EvalResult evaluate_document(const Document& d, const InferenceGraph& g, const Calculus& calc,
                             const RankOptions& opt);

// TSV rendering: doc_id, rank key (6 decimals), JSON truth value per line.
std::string ranking_tsv(const RankedResult& r);

}  // namespace evret
