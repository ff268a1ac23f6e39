#include "evret/interval_calculus.hpp"

#include <algorithm>

#include "evret/errors.hpp"

namespace evret {

static double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

IntervalValue interval_conjoin(const IntervalPreset& p, IntervalValue a, IntervalValue b) {
    switch (p.variant) {
        case IntervalVariant::Frechet:
            return {std::max(0.0, a.lo + b.lo - 1.0), std::min(a.hi, b.hi)};
        case IntervalVariant::Support:
            return {a.lo * b.lo, a.hi * b.hi};
        case IntervalVariant::Extension:
            return {tnorm_apply(p.base.tnorm, a.lo, b.lo),
                    tnorm_apply(p.base.tnorm, a.hi, b.hi)};
        case IntervalVariant::Mpmt:
            return {std::max(0.0, a.lo + b.lo - 1.0), std::max(0.0, a.hi + b.hi - 1.0)};
    }
    return {};
}

IntervalValue interval_disjoin(const IntervalPreset& p, IntervalValue a, IntervalValue b) {
    switch (p.variant) {
        case IntervalVariant::Frechet:
            return {std::max(a.lo, b.lo), std::min(1.0, a.hi + b.hi)};
        case IntervalVariant::Support:
            return {conorm_apply(TNorm::Product, a.lo, b.lo),
                    conorm_apply(TNorm::Product, a.hi, b.hi)};
        case IntervalVariant::Extension:
            return {conorm_apply(p.base.tnorm, a.lo, b.lo),
                    conorm_apply(p.base.tnorm, a.hi, b.hi)};
        case IntervalVariant::Mpmt:
            return {std::min(1.0, a.lo + b.lo), std::min(1.0, a.hi + b.hi)};
    }
    return {};
}

IntervalValue interval_negate(IntervalValue a) { return {1.0 - a.hi, 1.0 - a.lo}; }

IntervalValue interval_detach(const IntervalPreset& p, IntervalValue body, IntervalValue weight) {
    switch (p.variant) {
        case IntervalVariant::Frechet:
            // weight bounds P(~A or B); B implies that disjunct, A and it imply B.
            return {std::max(0.0, body.lo + weight.lo - 1.0), weight.hi};
        case IntervalVariant::Support: {
            // weight bounds P(B|A); P(B|~A) is free in [0,1].
            double lo = body.lo * weight.lo;
            double hi = 1.0 - body.lo * (1.0 - weight.hi);
            return {lo, std::max(hi, lo)};
        }
        case IntervalVariant::Extension:
            return {detach_scalar(p.base.detach, body.lo, weight.lo),
                    detach_scalar(p.base.detach, body.hi, weight.hi)};
        case IntervalVariant::Mpmt: {
            double lo = std::max(0.0, body.lo + weight.lo - 1.0);
            if (weight.hi >= 1.0) return {lo, 1.0};
            // Upper constraint forces v[B] <= v[A] + w_hi - 1; compare before
            // clamping so an empty feasible set is detected even when lo == 0.
            double hi = body.hi + weight.hi - 1.0;
            if (hi < lo)
                throw InconsistentEvidenceError(
                    "mpmt detachment infeasible: weight [" + std::to_string(weight.lo) +
                    "," + std::to_string(weight.hi) + "] contradicts body bounds");
            return {lo, clamp01(hi)};
        }
    }
    return {};
}

IntervalValue interval_combine(const IntervalPreset& p, IntervalValue a, IntervalValue b) {
    if (p.variant == IntervalVariant::Extension)
        return {combine_scalar(p.base.combine, a.lo, b.lo),
                combine_scalar(p.base.combine, a.hi, b.hi)};
    return interval_disjoin(p, a, b);
}

const char* interval_variant_name(IntervalVariant v) {
    switch (v) {
        case IntervalVariant::Frechet: return "frechet";
        case IntervalVariant::Support: return "support";
        case IntervalVariant::Extension: return "extension";
        case IntervalVariant::Mpmt: return "mpmt";
    }
    return "?";
}

}  // namespace evret
