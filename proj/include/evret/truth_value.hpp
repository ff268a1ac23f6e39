#pragma once

// Truth-value representations shared by every calculus family:
//   scalar v in [0,1]; interval [lo,hi] with lo <= hi; fuzzy membership
//   vector over a fixed grid on [0,1] (kGridSize points, step 0.01).

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace evret {

inline constexpr int kGridSize = 101;

inline double grid_x(int i) { return i / 100.0; }

struct ScalarValue {
    double v = 0.0;
    bool operator==(const ScalarValue&) const = default;
};

struct IntervalValue {
    double lo = 0.0;
    double hi = 0.0;
    bool operator==(const IntervalValue&) const = default;
};

struct FuzzyValue {
    std::vector<double> mu;  // size kGridSize
    bool operator==(const FuzzyValue&) const = default;
};

using TruthValue = std::variant<ScalarValue, IntervalValue, FuzzyValue>;

// Rule weight as written in rule source: decimal, interval, or term name.
using WeightLiteral = std::variant<double, IntervalValue, std::string>;

enum class Family { Scalar, Interval, Fuzzy };

Family family_of(const TruthValue& tv);
const char* family_name(Family f);

// nullopt when valid, else a description of the violated invariant.
std::optional<std::string> check_valid(const TruthValue& tv);

// Quasi-concavity over the grid: no point strictly below both a larger value
// to its left and a larger value to its right.
bool fuzzy_is_convex(std::span<const double> mu);

// Smallest quasi-concave majorant (pointwise min of running maxima).
FuzzyValue fuzzy_convex_hull(const FuzzyValue& f);

double fuzzy_centroid(std::span<const double> mu);  // 0 when mu is all-zero
// Support bounds as grid x values; nullopt when mu is all-zero.
std::optional<double> fuzzy_support_lo(std::span<const double> mu);
std::optional<double> fuzzy_support_hi(std::span<const double> mu);

FuzzyValue fuzzy_singleton(double x);              // 1 at the nearest grid point
FuzzyValue fuzzy_rectangle(double lo, double hi);  // 1 on [lo,hi], 0 outside
FuzzyValue fuzzy_all_ones();

// Ranking scale: scalar v; interval lo; fuzzy centroid.
double rank_key(const TruthValue& tv);
// Tie-break scale: scalar v; interval hi; fuzzy centroid.
double secondary_key(const TruthValue& tv);

bool truth_equal(const TruthValue& a, const TruthValue& b);  // exact (bitwise ==)

// Human-readable short form: "0.4", "[0.4, 0.9]", "fuzzy(peak=0.7)".
std::string render_compact(const TruthValue& tv);

}  // namespace evret
