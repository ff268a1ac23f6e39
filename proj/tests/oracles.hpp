// Brute-force reference computations used to pin expected values in tests.
// Everything here is derived from first principles (grid enumeration over
// probability distributions / truth assignments), independent of the library
// formulas, so agreement is meaningful.
#pragma once

#include <optional>
#include <vector>

#include "evret/interval_calculus.hpp"
#include "evret/scalar_calculus.hpp"
#include "evret/truth_value.hpp"

namespace oracle {

// Implication operator the detachment of each variant must invert.
double implication(evret::DetachOp d, double a, double b);

// Smallest b on the 0.01 grid with implication(a, b) >= w. The detachment
// result should be this infimum (the tightest sound lower bound on the
// consequent), up to grid resolution.
double detach_infimum(evret::DetachOp d, double a, double w);

// Extremes of P(A and B) / P(A or B) over every joint distribution of two
// events with marginals constrained to the given intervals. Built by
// enumerating (p11, p10, p01) on a 0.01 simplex grid.
class FrechetTables {
  public:
    FrechetTables();
    evret::IntervalValue conjoin(const evret::IntervalValue& a,
                                 const evret::IntervalValue& b) const;
    evret::IntervalValue disjoin(const evret::IntervalValue& a,
                                 const evret::IntervalValue& b) const;

  private:
    // indexed [pa * 100][pb * 100]
    std::vector<std::vector<double>> min_and_, max_and_, min_or_, max_or_;
    evret::IntervalValue scan(const std::vector<std::vector<double>>& lo_tab,
                              const std::vector<std::vector<double>>& hi_tab,
                              const evret::IntervalValue& a,
                              const evret::IntervalValue& b) const;
};

// Feasible consequent values b for which some antecedent a in `body` gives a
// Lukasiewicz implication value min(1, 1-a+b) inside `weight`. Enumerated on
// the 0.01 grid; empty feasible set -> nullopt.
std::optional<evret::IntervalValue> mpmt_detach(const evret::IntervalValue& body,
                                                const evret::IntervalValue& weight);

// Extremes of P(B) = P(B|A)P(A) + P(B|~A)(1-P(A)) with P(A) in `body`,
// P(B|A) in `weight`, P(B|~A) unconstrained in [0,1].
evret::IntervalValue support_detach(const evret::IntervalValue& body,
                                    const evret::IntervalValue& weight);

}  // namespace oracle
