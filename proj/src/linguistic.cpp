#include "evret/linguistic.hpp"

#include <algorithm>
#include <cmath>

#include "evret/errors.hpp"

namespace evret {

namespace {
constexpr double kEps = 1e-9;
}

CutLevels CutLevels::defaults() {
    CutLevels c;
    c.levels = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    return c;
}

std::optional<IntervalValue> alpha_cut(const FuzzyValue& f, double lambda) {
    int lo = -1, hi = -1;
    for (int i = 0; i < kGridSize; ++i) {
        if (f.mu[i] >= lambda - kEps) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    if (lo < 0) return std::nullopt;
    return IntervalValue{grid_x(lo), grid_x(hi)};
}

namespace {

// Cut with sub-grid edge positions recovered by linear interpolation between
// adjacent samples; lambda == 0 yields the support widened to the adjacent
// zero samples (the lambda -> 0+ limit of the interpolated edges).  Crisp
// edges stay put so rectangles keep reducing to the base interval calculus.
// Keeps piecewise-linear terms exactly reconstructible; the public alpha_cut
// above keeps plain grid-point semantics.
// A full 0 -> 1 rise within one cell is a crisp edge (rectangular operand),
// not a sampled ramp: its cut sits on the sample itself at every level.
bool crisp_edge(double outside, double inside) {
    return outside <= kEps && inside >= 1.0 - kEps;
}

std::optional<IntervalValue> interp_cut(const FuzzyValue& f, double lambda) {
    if (lambda <= kEps) {
        int i0 = -1, i1 = -1;
        for (int i = 0; i < kGridSize; ++i)
            if (f.mu[i] > 0.0) { if (i0 < 0) i0 = i; i1 = i; }
        if (i0 < 0) return std::nullopt;
        double lo = grid_x(i0);
        if (i0 > 0 && !crisp_edge(f.mu[i0 - 1], f.mu[i0])) lo = grid_x(i0 - 1);
        double hi = grid_x(i1);
        if (i1 < kGridSize - 1 && !crisp_edge(f.mu[i1 + 1], f.mu[i1])) hi = grid_x(i1 + 1);
        return IntervalValue{lo, hi};
    }
    int i0 = -1, i1 = -1;
    for (int i = 0; i < kGridSize; ++i)
        if (f.mu[i] >= lambda - kEps) { if (i0 < 0) i0 = i; i1 = i; }
    if (i0 < 0) return std::nullopt;
    double lo = grid_x(i0);
    if (i0 > 0) {
        double m0 = f.mu[i0 - 1], m1 = f.mu[i0];
        if (m1 > m0 + kEps && !crisp_edge(m0, m1)) {
            double t = std::clamp((lambda - m0) / (m1 - m0), 0.0, 1.0);
            lo = grid_x(i0 - 1) + 0.01 * t;
        }
    }
    double hi = grid_x(i1);
    if (i1 < kGridSize - 1) {
        double m0 = f.mu[i1 + 1], m1 = f.mu[i1];
        if (m1 > m0 + kEps && !crisp_edge(m0, m1)) {
            double t = std::clamp((lambda - m0) / (m1 - m0), 0.0, 1.0);
            hi = grid_x(i1 + 1) - 0.01 * t;
        }
    }
    return IntervalValue{lo, hi};
}

IntervalValue apply_base(Connective op, const IntervalPreset& base,
                         std::span<const IntervalValue> cuts) {
    switch (op) {
        case Connective::Conjoin: return interval_conjoin(base, cuts[0], cuts[1]);
        case Connective::Disjoin: return interval_disjoin(base, cuts[0], cuts[1]);
        case Connective::Negate: return interval_negate(cuts[0]);
        case Connective::Detach: return interval_detach(base, cuts[0], cuts[1]);
        case Connective::Combine: return interval_combine(base, cuts[0], cuts[1]);
    }
    return {};
}

}  // namespace

FuzzyValue eval_connective(Connective op, const IntervalPreset& base,
                           std::span<const FuzzyValue> operands,
                           const LinguisticOptions& opts) {
    const size_t arity = op == Connective::Negate ? 1 : 2;
    if (operands.size() != arity) throw DomainError("connective arity mismatch");

    std::vector<FuzzyValue> ops;
    ops.reserve(arity);
    for (const auto& o : operands) {
        if (static_cast<int>(o.mu.size()) != kGridSize)
            throw DomainError("fuzzy operand has wrong grid size");
        if (!fuzzy_is_convex(o.mu)) {
            if (!opts.convex_hull_fallback)
                throw NonConvexTermError("non-convex operand in connective");
            ops.push_back(fuzzy_convex_hull(o));
        } else {
            ops.push_back(o);
        }
    }

    FuzzyValue out;
    out.mu.assign(kGridSize, 0.0);

    std::vector<double> lam;
    std::vector<IntervalValue> res;
    std::vector<IntervalValue> cuts(arity);

    bool any_empty = false;
    for (size_t j = 0; j < arity; ++j) {
        auto c = interp_cut(ops[j], 0.0);
        if (!c) { any_empty = true; break; }
        cuts[j] = *c;
    }
    if (any_empty) return out;  // an all-zero operand zeroes the result
    lam.push_back(0.0);
    res.push_back(apply_base(op, base, cuts));

    for (double level : opts.levels.levels) {
        bool empty = false;
        for (size_t j = 0; j < arity; ++j) {
            auto c = interp_cut(ops[j], level);
            if (!c) { empty = true; break; }  // skipped level
            cuts[j] = *c;
        }
        if (empty) continue;
        lam.push_back(level);
        res.push_back(apply_base(op, base, cuts));
    }

    // A result cut lying strictly inside one grid cell (e.g. the product of
    // two crisp singletons) covers no grid point; widen it to the nearest one,
    // then restore outer-contains-inner ordering disturbed by the widening.
    const int m = static_cast<int>(lam.size());
    for (int j = m - 1; j >= 0; --j) {
        auto& r = res[j];
        int ilo = static_cast<int>(std::ceil((r.lo - kEps) * 100.0));
        int ihi = static_cast<int>(std::floor((r.hi + kEps) * 100.0));
        if (ilo > ihi) {
            int g = std::clamp(
                static_cast<int>(std::lround((r.lo + r.hi) * 50.0)), 0, kGridSize - 1);
            r.lo = std::min(r.lo, grid_x(g));
            r.hi = std::max(r.hi, grid_x(g));
        }
    }
    for (int j = m - 2; j >= 0; --j) {
        res[j].lo = std::min(res[j].lo, res[j + 1].lo);
        res[j].hi = std::max(res[j].hi, res[j + 1].hi);
    }

    // Rebuild: membership is at least lam[k] inside the level-k result cut and
    // ramps linearly between consecutive cut boundaries.
    for (int i = 0; i < kGridSize; ++i) {
        double x = grid_x(i);
        int k = -1;
        for (int j = 0; j < m; ++j) {
            if (x >= res[j].lo - kEps && x <= res[j].hi + kEps) k = j;
            else if (k >= 0) break;  // result cuts are nested
        }
        if (k < 0) continue;
        double v = lam[k];
        if (k + 1 < m) {
            const auto& outer = res[k];
            const auto& inner = res[k + 1];
            double lo_gap = inner.lo - outer.lo;
            double hi_gap = outer.hi - inner.hi;
            if (x < inner.lo - kEps && lo_gap > kEps)
                v = lam[k] + (lam[k + 1] - lam[k]) * (x - outer.lo) / lo_gap;
            else if (x > inner.hi + kEps && hi_gap > kEps)
                v = lam[k] + (lam[k + 1] - lam[k]) * (outer.hi - x) / hi_gap;
            v = std::clamp(v, lam[k], lam[k + 1]);
        }
        out.mu[i] = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

}  // namespace evret
