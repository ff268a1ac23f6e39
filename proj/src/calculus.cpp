#include "evret/calculus.hpp"

#include <algorithm>

#include "evret/errors.hpp"

namespace evret {

namespace {

const ScalarValue& as_scalar(const TruthValue& v) {
    if (const auto* s = std::get_if<ScalarValue>(&v)) return *s;
    throw DomainError("expected a scalar truth value");
}

const IntervalValue& as_interval(const TruthValue& v) {
    if (const auto* iv = std::get_if<IntervalValue>(&v)) return *iv;
    throw DomainError("expected an interval truth value");
}

const FuzzyValue& as_fuzzy(const TruthValue& v) {
    if (const auto* f = std::get_if<FuzzyValue>(&v)) return *f;
    throw DomainError("expected a fuzzy truth value");
}

void check_literal(const WeightLiteral& w) {
    if (const auto* d = std::get_if<double>(&w)) {
        if (*d < 0.0 || *d > 1.0) throw CoercionError("scalar weight outside [0,1]");
    } else if (const auto* iv = std::get_if<IntervalValue>(&w)) {
        if (check_valid(TruthValue{*iv}))
            throw CoercionError("malformed interval weight");
    }
}

// Fuzzy lift of a literal, for defuzzification and the linguistic family.
FuzzyValue lift_fuzzy(const WeightLiteral& w, const TermDictionary* dict) {
    if (const auto* d = std::get_if<double>(&w)) return fuzzy_singleton(*d);
    if (const auto* iv = std::get_if<IntervalValue>(&w))
        return fuzzy_rectangle(iv->lo, iv->hi);
    const auto& name = std::get<std::string>(w);
    if (!dict)
        throw CoercionError("linguistic weight \"" + name + "\" requires a terms dictionary");
    const FuzzyValue* f = dict->find(name);
    if (!f) throw CoercionError("unknown linguistic term \"" + name + "\"");
    return *f;
}

double defuzzified(const WeightLiteral& w, const TermDictionary* dict) {
    return fuzzy_centroid(lift_fuzzy(w, dict).mu);
}

class ScalarCalculus final : public Calculus {
public:
    explicit ScalarCalculus(ScalarPreset p) : p_(p) {}

    Family family() const override { return Family::Scalar; }

    std::string name() const override {
        return std::string("scalar.") + tnorm_name(p_.tnorm) +
               ".detach=" + detach_name(p_.detach) +
               ".combine=" + combine_name(p_.combine);
    }

    TruthValue conjoin(const TruthValue& a, const TruthValue& b) const override {
        return ScalarValue{tnorm_apply(p_.tnorm, as_scalar(a).v, as_scalar(b).v)};
    }
    TruthValue disjoin(const TruthValue& a, const TruthValue& b) const override {
        return ScalarValue{conorm_apply(p_.tnorm, as_scalar(a).v, as_scalar(b).v)};
    }
    TruthValue negate(const TruthValue& a) const override {
        return ScalarValue{negate_scalar(as_scalar(a).v)};
    }
    TruthValue detach(const TruthValue& body, const TruthValue& weight) const override {
        return ScalarValue{detach_scalar(p_.detach, as_scalar(body).v, as_scalar(weight).v)};
    }
    TruthValue combine(const TruthValue& a, const TruthValue& b) const override {
        return ScalarValue{combine_scalar(p_.combine, as_scalar(a).v, as_scalar(b).v)};
    }

    TruthValue top() const override { return ScalarValue{1.0}; }
    TruthValue bottom() const override { return ScalarValue{0.0}; }
    std::optional<TruthValue> unknown() const override { return std::nullopt; }

    double conj_upper_bound(const TruthValue& partial) const override {
        return as_scalar(partial).v;
    }
    bool theta_prunable() const override { return true; }

    TruthValue coerce_weight(const WeightLiteral& w, const TermDictionary* dict,
                             bool defuzzify) const override {
        check_literal(w);
        if (const auto* d = std::get_if<double>(&w)) return ScalarValue{*d};
        if (!defuzzify)
            throw CoercionError(std::holds_alternative<IntervalValue>(w)
                                    ? "interval weight under a scalar calculus requires defuzzify"
                                    : "linguistic weight under a scalar calculus requires defuzzify");
        return ScalarValue{defuzzified(w, dict)};
    }

    OpNames op_names() const override {
        return {tnorm_name(p_.tnorm), tnorm_name(p_.tnorm), "complement",
                detach_name(p_.detach), combine_name(p_.combine)};
    }

private:
    ScalarPreset p_;
};

std::string scalar_canonical(const ScalarPreset& p) {
    return std::string("scalar.") + tnorm_name(p.tnorm) + ".detach=" + detach_name(p.detach) +
           ".combine=" + combine_name(p.combine);
}

std::string interval_canonical(const IntervalPreset& p) {
    if (p.variant == IntervalVariant::Extension)
        return "interval.extension:" + scalar_canonical(p.base);
    return std::string("interval.") + interval_variant_name(p.variant);
}

class IntervalCalculus final : public Calculus {
public:
    explicit IntervalCalculus(IntervalPreset p) : p_(p) {}

    Family family() const override { return Family::Interval; }
    std::string name() const override { return interval_canonical(p_); }

    TruthValue conjoin(const TruthValue& a, const TruthValue& b) const override {
        return interval_conjoin(p_, as_interval(a), as_interval(b));
    }
    TruthValue disjoin(const TruthValue& a, const TruthValue& b) const override {
        return interval_disjoin(p_, as_interval(a), as_interval(b));
    }
    TruthValue negate(const TruthValue& a) const override {
        return interval_negate(as_interval(a));
    }
    TruthValue detach(const TruthValue& body, const TruthValue& weight) const override {
        return interval_detach(p_, as_interval(body), as_interval(weight));
    }
    TruthValue combine(const TruthValue& a, const TruthValue& b) const override {
        return interval_combine(p_, as_interval(a), as_interval(b));
    }

    TruthValue top() const override { return IntervalValue{1.0, 1.0}; }
    TruthValue bottom() const override { return IntervalValue{0.0, 0.0}; }
    std::optional<TruthValue> unknown() const override {
        return TruthValue{IntervalValue{0.0, 1.0}};
    }

    double conj_upper_bound(const TruthValue& partial) const override {
        return as_interval(partial).lo;
    }
    bool theta_prunable() const override { return true; }

    TruthValue coerce_weight(const WeightLiteral& w, const TermDictionary* dict,
                             bool defuzzify) const override {
        check_literal(w);
        if (const auto* d = std::get_if<double>(&w)) return IntervalValue{*d, *d};
        if (const auto* iv = std::get_if<IntervalValue>(&w)) return *iv;
        if (!defuzzify)
            throw CoercionError("linguistic weight under an interval calculus requires defuzzify");
        double c = defuzzified(w, dict);
        return IntervalValue{c, c};
    }

    OpNames op_names() const override {
        std::string v = interval_variant_name(p_.variant);
        if (p_.variant == IntervalVariant::Extension) {
            return {std::string("extension-") + tnorm_name(p_.base.tnorm),
                    std::string("extension-") + tnorm_name(p_.base.tnorm),
                    "complement",
                    std::string("extension-") + detach_name(p_.base.detach),
                    std::string("extension-") + combine_name(p_.base.combine)};
        }
        return {v, v, "complement", v, v + "-disjoin"};
    }

private:
    IntervalPreset p_;
};

class LinguisticCalculus final : public Calculus {
public:
    explicit LinguisticCalculus(IntervalPreset base) : base_(base) {}

    Family family() const override { return Family::Fuzzy; }
    std::string name() const override { return "linguistic:" + interval_canonical(base_); }

    TruthValue conjoin(const TruthValue& a, const TruthValue& b) const override {
        return binary(Connective::Conjoin, a, b);
    }
    TruthValue disjoin(const TruthValue& a, const TruthValue& b) const override {
        return binary(Connective::Disjoin, a, b);
    }
    TruthValue negate(const TruthValue& a) const override {
        const FuzzyValue ops[] = {as_fuzzy(a)};
        return eval_connective(Connective::Negate, base_, ops, opts_);
    }
    TruthValue detach(const TruthValue& body, const TruthValue& weight) const override {
        return binary(Connective::Detach, body, weight);
    }
    TruthValue combine(const TruthValue& a, const TruthValue& b) const override {
        return binary(Connective::Combine, a, b);
    }

    TruthValue top() const override { return fuzzy_singleton(1.0); }
    TruthValue bottom() const override { return fuzzy_singleton(0.0); }
    std::optional<TruthValue> unknown() const override { return TruthValue{fuzzy_all_ones()}; }

    double conj_upper_bound(const TruthValue& partial) const override {
        // Conjoining shrinks every cut endpoint, so no completion can place
        // membership above the current support; the centroid stays below it.
        return fuzzy_support_hi(as_fuzzy(partial).mu).value_or(0.0);
    }
    // Centroid rank is not monotone under the cut-dominance order, so a cheap
    // sound threshold bound is unavailable; only exact short-circuits apply.
    bool theta_prunable() const override { return false; }

    TruthValue coerce_weight(const WeightLiteral& w, const TermDictionary* dict,
                             bool) const override {
        check_literal(w);
        return lift_fuzzy(w, dict);
    }

    OpNames op_names() const override {
        auto base = IntervalCalculus(base_).op_names();
        return {"cuts/" + base.conjoin, "cuts/" + base.disjoin, "cuts/" + base.negate,
                "cuts/" + base.detach, "cuts/" + base.combine};
    }

private:
    TruthValue binary(Connective op, const TruthValue& a, const TruthValue& b) const {
        const FuzzyValue ops[] = {as_fuzzy(a), as_fuzzy(b)};
        return eval_connective(op, base_, ops, opts_);
    }

    IntervalPreset base_;
    LinguisticOptions opts_;
};

}  // namespace

ScalarPreset parse_scalar_preset(const std::string& id) {
    const std::string prefix = "scalar.";
    if (id.rfind(prefix, 0) != 0)
        throw UnknownCalculusError("not a scalar preset: " + id);
    std::string rest = id.substr(prefix.size());

    // base name runs to the first '.' (suffixes are .key=value)
    auto dot = rest.find('.');
    std::string base = rest.substr(0, dot);

    ScalarPreset p;
    if (base == "godel") { p.tnorm = TNorm::Min; p.detach = DetachOp::Goguen; }
    else if (base == "product") { p.tnorm = TNorm::Product; p.detach = DetachOp::Goguen; }
    else if (base == "lukasiewicz") { p.tnorm = TNorm::Lukasiewicz; p.detach = DetachOp::Lukasiewicz; }
    else throw UnknownCalculusError("unknown scalar preset: " + id);
    p.combine = CombineOp::ProbSum;

    while (dot != std::string::npos) {
        rest = rest.substr(dot + 1);
        dot = rest.find('.');
        std::string opt = rest.substr(0, dot);
        if (opt.rfind("detach=", 0) == 0) {
            std::string d = opt.substr(7);
            if (d == "lukasiewicz") p.detach = DetachOp::Lukasiewicz;
            else if (d == "godel") p.detach = DetachOp::Godel;
            else if (d == "goguen") p.detach = DetachOp::Goguen;
            else if (d == "kleene-dienes") p.detach = DetachOp::KleeneDienes;
            else throw UnknownCalculusError("unknown detachment operator: " + d);
        } else if (opt.rfind("combine=", 0) == 0) {
            std::string c = opt.substr(8);
            if (c == "prob-sum") p.combine = CombineOp::ProbSum;
            else if (c == "max") p.combine = CombineOp::Max;
            else throw UnknownCalculusError("unknown combiner: " + c);
        } else {
            throw UnknownCalculusError("unknown scalar preset option: " + opt);
        }
    }
    return p;
}

IntervalPreset parse_interval_preset(const std::string& id) {
    const std::string prefix = "interval.";
    if (id.rfind(prefix, 0) != 0)
        throw UnknownCalculusError("not an interval preset: " + id);
    std::string rest = id.substr(prefix.size());
    IntervalPreset p;
    if (rest == "frechet") { p.variant = IntervalVariant::Frechet; return p; }
    if (rest == "support") { p.variant = IntervalVariant::Support; return p; }
    if (rest == "mpmt") { p.variant = IntervalVariant::Mpmt; return p; }
    const std::string ext = "extension:";
    if (rest.rfind(ext, 0) == 0) {
        p.variant = IntervalVariant::Extension;
        p.base = parse_scalar_preset(rest.substr(ext.size()));
        return p;
    }
    throw UnknownCalculusError("unknown interval preset: " + id);
}

std::unique_ptr<const Calculus> make_calculus(const std::string& id) {
    if (id.rfind("scalar.", 0) == 0)
        return std::make_unique<ScalarCalculus>(parse_scalar_preset(id));
    if (id.rfind("interval.", 0) == 0)
        return std::make_unique<IntervalCalculus>(parse_interval_preset(id));
    const std::string ling = "linguistic:";
    if (id.rfind(ling, 0) == 0)
        return std::make_unique<LinguisticCalculus>(parse_interval_preset(id.substr(ling.size())));
    throw UnknownCalculusError("unknown calculus: " + id);
}

std::vector<std::string> registered_presets() {
    return {
        "scalar.godel",
        "scalar.product",
        "scalar.lukasiewicz",
        "interval.frechet",
        "interval.support",
        "interval.extension:scalar.godel",
        "interval.extension:scalar.product",
        "interval.extension:scalar.lukasiewicz",
        "interval.mpmt",
        "linguistic:interval.frechet",
        "linguistic:interval.support",
    };
}

}  // namespace evret
