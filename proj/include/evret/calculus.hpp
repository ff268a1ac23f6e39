#pragma once

// Uniform operator table over the three value families, selected by preset
// string:
//   scalar.godel | scalar.product | scalar.lukasiewicz
//       with optional suffixes .detach=<lukasiewicz|godel|goguen|kleene-dienes>
//       and .combine=<prob-sum|max>
//   interval.frechet | interval.support | interval.mpmt
//   interval.extension:<scalar preset>
//   linguistic:<interval preset>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evret/fuzzy_terms.hpp"
#include "evret/interval_calculus.hpp"
#include "evret/linguistic.hpp"
#include "evret/scalar_calculus.hpp"
#include "evret/truth_value.hpp"

namespace evret {

struct OpNames {
    std::string conjoin, disjoin, negate, detach, combine;
};

class Calculus {
public:
    virtual ~Calculus() = default;

    virtual Family family() const = 0;
    virtual std::string name() const = 0;  // canonical preset string

    virtual TruthValue conjoin(const TruthValue& a, const TruthValue& b) const = 0;
    virtual TruthValue disjoin(const TruthValue& a, const TruthValue& b) const = 0;
    virtual TruthValue negate(const TruthValue& a) const = 0;
    // May throw InconsistentEvidenceError (interval.mpmt and linguistic over it).
    virtual TruthValue detach(const TruthValue& body, const TruthValue& weight) const = 0;
    virtual TruthValue combine(const TruthValue& a, const TruthValue& b) const = 0;

    virtual TruthValue top() const = 0;
    virtual TruthValue bottom() const = 0;
    // Scalars have no unknown element.
    virtual std::optional<TruthValue> unknown() const = 0;

    double rank(const TruthValue& v) const { return rank_key(v); }

    // Upper bound on rank_key of any conjunction extending the partial value.
    virtual double conj_upper_bound(const TruthValue& partial) const = 0;

    // Whether threshold-based conjunction pruning keeps the rank bound sound
    // for this family (see evaluate()); exact short-circuits are always on.
    virtual bool theta_prunable() const = 0;

    // Lift a rule weight literal into this family.  A linguistic literal needs
    // a dictionary; with defuzzify set, richer literals collapse to the
    // centroid of their fuzzy lift.  Throws CoercionError.
    virtual TruthValue coerce_weight(const WeightLiteral& w, const TermDictionary* dict,
                                     bool defuzzify) const = 0;

    virtual OpNames op_names() const = 0;
};

// Throws UnknownCalculusError for unrecognized preset strings.
std::unique_ptr<const Calculus> make_calculus(const std::string& id);

// Canonical preset list used by "every registered calculus" sweeps.
std::vector<std::string> registered_presets();

ScalarPreset parse_scalar_preset(const std::string& id);
IntervalPreset parse_interval_preset(const std::string& id);

}  // namespace evret
