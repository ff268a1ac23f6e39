#include "evret/truth_value.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace evret {

Family family_of(const TruthValue& tv) {
    if (std::holds_alternative<ScalarValue>(tv)) return Family::Scalar;
    if (std::holds_alternative<IntervalValue>(tv)) return Family::Interval;
    return Family::Fuzzy;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Scalar: return "scalar";
        case Family::Interval: return "interval";
        default: return "fuzzy";
    }
}

std::optional<std::string> check_valid(const TruthValue& tv) {
    if (const auto* s = std::get_if<ScalarValue>(&tv)) {
        if (!std::isfinite(s->v)) return "scalar value is not finite";
        if (s->v < 0.0 || s->v > 1.0) return "scalar value outside [0,1]";
        return std::nullopt;
    }
    if (const auto* iv = std::get_if<IntervalValue>(&tv)) {
        if (!std::isfinite(iv->lo) || !std::isfinite(iv->hi))
            return "interval endpoint is not finite";
        if (iv->lo < 0.0 || iv->hi > 1.0) return "interval endpoints outside [0,1]";
        if (iv->lo > iv->hi) return "interval lower endpoint exceeds upper";
        return std::nullopt;
    }
    const auto& f = std::get<FuzzyValue>(tv);
    if (static_cast<int>(f.mu.size()) != kGridSize)
        return "fuzzy vector has wrong grid size";
    for (double m : f.mu) {
        if (!std::isfinite(m)) return "fuzzy membership is not finite";
        if (m < 0.0 || m > 1.0) return "fuzzy membership outside [0,1]";
    }
    if (!fuzzy_is_convex(f.mu)) return "fuzzy vector is not convex";
    return std::nullopt;
}

bool fuzzy_is_convex(std::span<const double> mu) {
    const int n = static_cast<int>(mu.size());
    // left_max[i] = max over j<i, scanned in one pass; right maxima scanned
    // backwards into a scratch vector.
    std::vector<double> right(n, 0.0);
    double rm = 0.0;
    for (int i = n - 1; i >= 0; --i) {
        right[i] = rm;  // max over j>i
        rm = std::max(rm, mu[i]);
    }
    double lm = 0.0;  // max over j<i
    for (int i = 0; i < n; ++i) {
        if (mu[i] < std::min(lm, right[i])) return false;
        lm = std::max(lm, mu[i]);
    }
    return true;
}

FuzzyValue fuzzy_convex_hull(const FuzzyValue& f) {
    const int n = static_cast<int>(f.mu.size());
    std::vector<double> pre(n), suf(n);
    double m = 0.0;
    for (int i = 0; i < n; ++i) { m = std::max(m, f.mu[i]); pre[i] = m; }
    m = 0.0;
    for (int i = n - 1; i >= 0; --i) { m = std::max(m, f.mu[i]); suf[i] = m; }
    FuzzyValue out;
    out.mu.resize(n);
    for (int i = 0; i < n; ++i) out.mu[i] = std::min(pre[i], suf[i]);
    return out;
}

double fuzzy_centroid(std::span<const double> mu) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
        num += mu[i] * grid_x(i);
        den += mu[i];
    }
    if (den == 0.0) return 0.0;
    return num / den;
}

std::optional<double> fuzzy_support_lo(std::span<const double> mu) {
    for (int i = 0; i < static_cast<int>(mu.size()); ++i)
        if (mu[i] > 0.0) return grid_x(i);
    return std::nullopt;
}

std::optional<double> fuzzy_support_hi(std::span<const double> mu) {
    for (int i = static_cast<int>(mu.size()) - 1; i >= 0; --i)
        if (mu[i] > 0.0) return grid_x(i);
    return std::nullopt;
}

FuzzyValue fuzzy_singleton(double x) {
    FuzzyValue f;
    f.mu.assign(kGridSize, 0.0);
    int i = static_cast<int>(std::lround(x * 100.0));
    i = std::clamp(i, 0, kGridSize - 1);
    f.mu[i] = 1.0;
    return f;
}

FuzzyValue fuzzy_rectangle(double lo, double hi) {
    FuzzyValue f;
    f.mu.assign(kGridSize, 0.0);
    for (int i = 0; i < kGridSize; ++i) {
        double x = grid_x(i);
        if (x >= lo - 1e-9 && x <= hi + 1e-9) f.mu[i] = 1.0;
    }
    return f;
}

FuzzyValue fuzzy_all_ones() {
    FuzzyValue f;
    f.mu.assign(kGridSize, 1.0);
    return f;
}

double rank_key(const TruthValue& tv) {
    if (const auto* s = std::get_if<ScalarValue>(&tv)) return s->v;
    if (const auto* iv = std::get_if<IntervalValue>(&tv)) return iv->lo;
    return fuzzy_centroid(std::get<FuzzyValue>(tv).mu);
}

double secondary_key(const TruthValue& tv) {
    if (const auto* s = std::get_if<ScalarValue>(&tv)) return s->v;
    if (const auto* iv = std::get_if<IntervalValue>(&tv)) return iv->hi;
    return fuzzy_centroid(std::get<FuzzyValue>(tv).mu);
}

bool truth_equal(const TruthValue& a, const TruthValue& b) {
    if (a.index() != b.index()) return false;
    if (const auto* s = std::get_if<ScalarValue>(&a))
        return s->v == std::get<ScalarValue>(b).v;
    if (const auto* iv = std::get_if<IntervalValue>(&a)) {
        const auto& o = std::get<IntervalValue>(b);
        return iv->lo == o.lo && iv->hi == o.hi;
    }
    return std::get<FuzzyValue>(a).mu == std::get<FuzzyValue>(b).mu;
}

static std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string render_compact(const TruthValue& tv) {
    if (const auto* s = std::get_if<ScalarValue>(&tv)) return short_num(s->v);
    if (const auto* iv = std::get_if<IntervalValue>(&tv))
        return "[" + short_num(iv->lo) + ", " + short_num(iv->hi) + "]";
    const auto& f = std::get<FuzzyValue>(tv);
    int peak = 0;
    for (int i = 1; i < kGridSize; ++i)
        if (f.mu[i] > f.mu[peak]) peak = i;
    return "fuzzy(peak=" + short_num(grid_x(peak)) +
           ", centroid=" + short_num(fuzzy_centroid(f.mu)) + ")";
}

}  // namespace evret
