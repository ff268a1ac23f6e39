#pragma once

// Retrieval comparison metrics between rankings of the same corpus: rank
// correlations with average-rank tie handling, retrieved-set overlap, and
// precision/recall against relevance judgments.

#include <optional>
#include <string>
#include <vector>

#include "evret/corpus.hpp"
#include "evret/ranking.hpp"

namespace evret {

struct PairMetrics {
    double spearman = 0.0;  // average-rank Pearson
    double kendall = 0.0;   // tau-b
    double jaccard = 0.0;   // retrieved-set overlap; both empty -> 1
};

// Throws MismatchedCorporaError unless both results cover the same ids.
// Fully tied rankings: correlation is 1 when both are fully tied, else 0.
PairMetrics compare_rankings(const RankedResult& a, const RankedResult& b);

struct PrecisionRecall {
    int hits = 0;       // |R ∩ R'|
    int retrieved = 0;  // |R|
    int relevant = 0;   // |R'|
    // precision undefined when nothing was retrieved
    std::optional<double> precision() const;
    std::optional<double> recall() const;
};

PrecisionRecall precision_recall(const RankedResult& r, const Judgments& j);

// Mean of (hi - lo) when every ranked value is an interval; otherwise empty.
std::optional<double> mean_interval_width(const RankedResult& r);

}  // namespace evret
