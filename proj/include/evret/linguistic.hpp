#pragma once

// Linguistic connectives by alpha-cut decomposition: cut both operands at a
// fixed ladder of levels, apply the base interval operation per level, and
// rebuild a membership vector from the nested result cuts.  Reconstruction
// interpolates between adjacent cut levels (plus a support-level cut at
// lambda -> 0), so piecewise-linear terms with level-aligned breakpoints pass
// through unchanged and crisp rectangles reduce exactly to the base interval
// calculus.

#include <optional>
#include <span>
#include <vector>

#include "evret/interval_calculus.hpp"
#include "evret/truth_value.hpp"

namespace evret {

struct CutLevels {
    std::vector<double> levels;  // ascending, in (0,1]
    static CutLevels defaults();  // {0.05, 0.1, 0.2, ..., 0.9, 1.0}
};

// [min,max] of grid points with mu >= lambda; nullopt when the cut is empty.
std::optional<IntervalValue> alpha_cut(const FuzzyValue& f, double lambda);

enum class Connective { Conjoin, Disjoin, Negate, Detach, Combine };

struct LinguisticOptions {
    CutLevels levels = CutLevels::defaults();
    // Replace non-convex operands by their convex hull instead of rejecting.
    bool convex_hull_fallback = false;
};

// operands: 1 for Negate, 2 otherwise (Detach: body, weight).  Throws
// NonConvexTermError for non-convex operands (unless the hull fallback is
// set) and propagates base-calculus errors such as InconsistentEvidenceError.
FuzzyValue eval_connective(Connective op, const IntervalPreset& base,
                           std::span<const FuzzyValue> operands,
                           const LinguisticOptions& opts);

}  // namespace evret
