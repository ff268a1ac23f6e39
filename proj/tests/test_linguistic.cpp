#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "evret/errors.hpp"
#include "evret/fuzzy_terms.hpp"
#include "evret/linguistic.hpp"
#include "oracles.hpp"

using namespace evret;

namespace {

using Pt = std::pair<double, double>;

FuzzyValue term(std::initializer_list<Pt> pts) {
    std::vector<Pt> v(pts);
    return define_term(v);
}

const IntervalPreset kFrechet{IntervalVariant::Frechet, {}};
const IntervalPreset kSupport{IntervalVariant::Support, {}};
const IntervalPreset kExtGodel{IntervalVariant::Extension,
                               {TNorm::Min, DetachOp::Goguen, CombineOp::ProbSum}};

double max_pointwise_diff(const FuzzyValue& a, const FuzzyValue& b) {
    double m = 0.0;
    for (int i = 0; i < kGridSize; ++i) m = std::max(m, std::abs(a.mu[i] - b.mu[i]));
    return m;
}

FuzzyValue eval1(Connective op, const IntervalPreset& base, const FuzzyValue& x) {
    std::array<FuzzyValue, 1> ops{x};
    return eval_connective(op, base, ops, {});
}

FuzzyValue eval2(Connective op, const IntervalPreset& base, const FuzzyValue& x,
                 const FuzzyValue& y) {
    std::array<FuzzyValue, 2> ops{x, y};
    return eval_connective(op, base, ops, {});
}

}  // namespace

TEST_SUITE("linguistic-calculus") {

TEST_CASE("terms sample their breakpoint polylines onto the grid") {
    FuzzyValue truey = term({{0, 0}, {0.7, 0}, {1, 1}});
    CHECK(truey.mu[70] == doctest::Approx(0.0));
    CHECK(truey.mu[85] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(truey.mu[100] == doctest::Approx(1.0));

    FuzzyValue falsy = term({{0, 1}, {0.3, 1}, {1, 0}});
    CHECK(falsy.mu[0] == doctest::Approx(1.0));
    CHECK(falsy.mu[30] == doctest::Approx(1.0));
    CHECK(falsy.mu[65] == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS((void)term({{0, 1}, {0.5, 0}, {1, 1}}), NonConvexTermError);
    CHECK_THROWS_AS((void)term({{0.2, 0}, {1, 1}}), MalformedTermError);   // x must start at 0
    CHECK_THROWS_AS((void)term({{0, 0}, {0.5, 1}}), MalformedTermError);   // and end at 1
    CHECK_THROWS_AS((void)term({{0, 0}, {0.5, 2.0}, {1, 0}}), MalformedTermError);
}

TEST_CASE("hedges transform membership pointwise") {
    FuzzyValue t = term({{0, 0}, {0.7, 0}, {1, 1}});
    FuzzyValue very = apply_hedge(Hedge::Very, t);
    FuzzyValue mol = apply_hedge(Hedge::MoreOrLess, t);
    for (int i = 0; i < kGridSize; ++i) {
        CHECK(very.mu[i] == doctest::Approx(t.mu[i] * t.mu[i]).epsilon(1e-12));
        CHECK(mol.mu[i] == doctest::Approx(std::sqrt(t.mu[i])).epsilon(1e-12));
    }
    CHECK(very.mu[85] == doctest::Approx(0.25).epsilon(1e-12));  // 0.5 squared
    CHECK(apply_hedge(Hedge::MoreOrLess, very).mu[85] == doctest::Approx(0.5).epsilon(1e-12));

    FuzzyValue back = apply_hedge(Hedge::Not, apply_hedge(Hedge::Not, t));
    CHECK(max_pointwise_diff(back, t) <= 1e-12);
}

TEST_CASE("alpha cuts of crisp, triangular, and empty terms") {
    FuzzyValue rect = fuzzy_rectangle(0.2, 0.6);
    for (double lam : {0.05, 0.5, 1.0}) {
        auto cut = alpha_cut(rect, lam);
        REQUIRE(cut.has_value());
        CHECK(cut->lo == doctest::Approx(0.2));
        CHECK(cut->hi == doctest::Approx(0.6));
    }

    FuzzyValue tri = term({{0, 0}, {0.5, 1}, {1, 0}});
    auto cut = alpha_cut(tri, 0.5);
    REQUIRE(cut.has_value());
    CHECK(cut->lo == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(cut->hi == doctest::Approx(0.75).epsilon(1e-9));

    FuzzyValue zero;
    zero.mu.assign(kGridSize, 0.0);
    CHECK_FALSE(alpha_cut(zero, 0.5).has_value());
}

TEST_CASE("cuts nest: higher levels give narrower intervals") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        double peak = u(rng);
        FuzzyValue tri = term({{0, 0}, {std::clamp(peak, 0.01, 0.99), 1}, {1, 0}});
        double l1 = u(rng), l2 = u(rng);
        if (l1 > l2) std::swap(l1, l2);
        l1 = std::clamp(l1, 0.01, 1.0);
        l2 = std::clamp(l2, l1, 1.0);
        auto c1 = alpha_cut(tri, l1), c2 = alpha_cut(tri, l2);
        // a cut above the sampled peak height is empty; nesting applies otherwise
        if (!c2.has_value()) continue;
        REQUIRE(c1.has_value());
        CHECK(c2->lo >= c1->lo - 1e-12);
        CHECK(c2->hi <= c1->hi + 1e-12);
    }
}

TEST_CASE("crisp operands reduce every connective to the base interval calculus") {
    const double grid_step = 0.01 + 1e-9;
    for (const auto& base : {kFrechet, kSupport}) {
        CAPTURE(std::string(interval_variant_name(base.variant)));
        for (int alo = 0; alo <= 10; alo += 2) {
            for (int ahi = alo; ahi <= 10; ahi += 2) {
                for (int blo = 0; blo <= 10; blo += 3) {
                    for (int bhi = blo; bhi <= 10; bhi += 3) {
                        IntervalValue A{alo / 10.0, ahi / 10.0}, B{blo / 10.0, bhi / 10.0};
                        FuzzyValue fa = fuzzy_rectangle(A.lo, A.hi);
                        FuzzyValue fb = fuzzy_rectangle(B.lo, B.hi);

                        auto check_op = [&](Connective op, IntervalValue want,
                                            const FuzzyValue& got) {
                            CAPTURE(static_cast<int>(op));
                            if (want.hi <= 0.0) {
                                // degenerate-at-zero result: support collapses
                                CHECK(fuzzy_centroid(got.mu) <= grid_step);
                                return;
                            }
                            auto lo = fuzzy_support_lo(got.mu);
                            auto hi = fuzzy_support_hi(got.mu);
                            REQUIRE(lo.has_value());
                            REQUIRE(hi.has_value());
                            CHECK(std::abs(*lo - want.lo) <= grid_step);
                            CHECK(std::abs(*hi - want.hi) <= grid_step);
                        };

                        check_op(Connective::Conjoin, interval_conjoin(base, A, B),
                                 eval2(Connective::Conjoin, base, fa, fb));
                        check_op(Connective::Disjoin, interval_disjoin(base, A, B),
                                 eval2(Connective::Disjoin, base, fa, fb));
                        check_op(Connective::Negate, interval_negate(A),
                                 eval1(Connective::Negate, base, fa));
                        check_op(Connective::Detach, interval_detach(base, A, B),
                                 eval2(Connective::Detach, base, fa, fb));
                        check_op(Connective::Combine, interval_combine(base, A, B),
                                 eval2(Connective::Combine, base, fa, fb));
                    }
                }
            }
        }
    }
}

TEST_CASE("conjoining with certainty is the identity under the min extension") {
    FuzzyValue t = term({{0, 0}, {0.7, 0}, {1, 1}});
    FuzzyValue certain = fuzzy_rectangle(1.0, 1.0);
    FuzzyValue got = eval2(Connective::Conjoin, kExtGodel, t, certain);
    CHECK(max_pointwise_diff(got, t) <= 1e-9);
}

TEST_CASE("negating a triangle mirrors it") {
    FuzzyValue tri = term({{0, 0}, {0.3, 1}, {1, 0}});
    FuzzyValue got = eval1(Connective::Negate, kFrechet, tri);
    FuzzyValue mirror;
    mirror.mu.resize(kGridSize);
    for (int i = 0; i < kGridSize; ++i) mirror.mu[i] = tri.mu[kGridSize - 1 - i];
    CHECK(max_pointwise_diff(got, mirror) <= 1e-9);
}

TEST_CASE("an all-zero operand yields an all-zero result") {
    FuzzyValue zero;
    zero.mu.assign(kGridSize, 0.0);
    FuzzyValue t = term({{0, 0}, {0.7, 0}, {1, 1}});
    FuzzyValue got = eval2(Connective::Conjoin, kFrechet, zero, t);
    for (double m : got.mu) CHECK(m == 0.0);
}

TEST_CASE("non-convex operands are rejected unless the hull fallback is set") {
    FuzzyValue tri = term({{0, 0}, {0.5, 1}, {1, 0}});
    FuzzyValue notc = apply_hedge(Hedge::Not, tri);  // dips at 0.5: not convex
    CHECK_FALSE(fuzzy_is_convex(notc.mu));

    std::array<FuzzyValue, 2> ops{notc, tri};
    CHECK_THROWS_AS((void)eval_connective(Connective::Conjoin, kFrechet, ops, {}),
                    NonConvexTermError);

    LinguisticOptions lo;
    lo.convex_hull_fallback = true;
    FuzzyValue got = eval_connective(Connective::Conjoin, kFrechet, ops, lo);
    CHECK(got.mu.size() == static_cast<size_t>(kGridSize));
}

TEST_CASE("dictionary generates a bounded hedge vocabulary") {
    auto dict = TermDictionary::build({
        {"true", term({{0, 0}, {0.7, 0}, {1, 1}})},
        {"false", term({{0, 1}, {0.3, 1}, {1, 0}})},
    });
    // per primary: bare + 3 depth-1 hedges + 9 depth-2 chains
    CHECK(dict.entries().size() == 26);
    CHECK(dict.find("true") != nullptr);
    CHECK(dict.find("very true") != nullptr);
    CHECK(dict.find("more or less false") != nullptr);
    CHECK(dict.find("not very true") != nullptr);
    CHECK(dict.find("definitely true") == nullptr);

    // depth-2 chain values match manual hedge application
    const FuzzyValue* nvt = dict.find("not very true");
    REQUIRE(nvt != nullptr);
    FuzzyValue manual =
        apply_hedge(Hedge::Not, apply_hedge(Hedge::Very, *dict.find("true")));
    CHECK(max_pointwise_diff(*nvt, manual) <= 1e-12);
}

TEST_CASE("nearest-term lookup and its tie-breaks") {
    FuzzyValue truey = term({{0, 0}, {0.7, 0}, {1, 1}});
    auto dict = TermDictionary::build({{"true", truey}});

    auto exact = dict.approximate(truey);
    CHECK(exact.name == "true");
    CHECK(exact.distance == doctest::Approx(0.0));

    auto very = dict.approximate(apply_hedge(Hedge::Very, truey));
    CHECK(very.name == "very true");
    CHECK(very.distance == doctest::Approx(0.0));

    FuzzyValue zero;
    zero.mu.assign(kGridSize, 0.0);
    double mass = 0.0;
    for (double m : truey.mu) mass += m;
    auto far = dict.approximate(zero);
    // the nearest entry is no farther than "true" itself (mass / grid size)
    CHECK(far.distance <= mass / kGridSize + 1e-12);
    CHECK(far.distance > 0.0);

    CHECK_THROWS_AS((void)TermDictionary::build({}).approximate(truey),
                    EmptyDictionaryError);
}

TEST_CASE("terms files parse with comments and reject malformed lines") {
    auto dict = TermDictionary::from_string(
        "# vocabulary\n"
        "term true : (0,0) (0.7,0) (1,1)\n"
        "\n"
        "term false : (0,1) (0.3,1) (1,0)\n");
    CHECK(dict.primary_names() == std::vector<std::string>{"true", "false"});
    CHECK(dict.entries().size() == 26);

    // parse failures carry the offending line number
    CHECK_THROWS_WITH_AS((void)TermDictionary::from_string("term broken (0,0)"),
                         doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(
        (void)TermDictionary::from_string("term a : (0,0) (1,1)\nterm x : (0,1) (0.5,0) (1,1)"),
        doctest::Contains("line 2"), ParseError);
}

TEST_CASE("the bundled vocabulary file loads") {
    auto dict = TermDictionary::from_file(EVRET_FIXTURE_DIR "/terms.txt");
    CHECK(dict.primary_names().size() == 5);
    CHECK(dict.entries().size() == 65);
    CHECK(dict.find("very certain") != nullptr);
    CHECK(dict.find("very likely") != nullptr);

    // used as rule weights in the bundled rulebase; must stay convex
    for (const char* name : {"very likely", "likely", "very certain"}) {
        const FuzzyValue* f = dict.find(name);
        REQUIRE(f != nullptr);
        CHECK(fuzzy_is_convex(f->mu));
    }
}

}  // TEST_SUITE
