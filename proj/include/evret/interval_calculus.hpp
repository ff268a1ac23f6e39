#pragma once

// Interval-valued operations, four variants:
//   frechet   - distribution-free Frechet-Hoeffding bounds
//   support   - independence products / probabilistic sums; detach treats the
//               weight as a conditional support pair
//   extension - endpoint-wise image of a scalar preset
//   mpmt      - Lukasiewicz-implication semantics in both directions; detach
//               may report inconsistent evidence
//
// negate is [1-hi, 1-lo] for every variant; combine is the variant's
// disjunction (extension lifts the scalar preset's combiner instead, so
// degenerate intervals reduce to the scalar calculus for every operation).

#include "evret/scalar_calculus.hpp"
#include "evret/truth_value.hpp"

namespace evret {

enum class IntervalVariant { Frechet, Support, Extension, Mpmt };

struct IntervalPreset {
    IntervalVariant variant = IntervalVariant::Frechet;
    ScalarPreset base;  // used by Extension only
};

IntervalValue interval_conjoin(const IntervalPreset& p, IntervalValue a, IntervalValue b);
IntervalValue interval_disjoin(const IntervalPreset& p, IntervalValue a, IntervalValue b);
IntervalValue interval_negate(IntervalValue a);
// Throws InconsistentEvidenceError (mpmt only) when the feasible set is empty.
IntervalValue interval_detach(const IntervalPreset& p, IntervalValue body, IntervalValue weight);
IntervalValue interval_combine(const IntervalPreset& p, IntervalValue a, IntervalValue b);

const char* interval_variant_name(IntervalVariant v);

}  // namespace evret
