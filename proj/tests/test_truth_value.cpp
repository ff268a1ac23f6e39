#include <doctest.h>

#include <cmath>
#include <random>

#include "evret/calculus.hpp"
#include "evret/errors.hpp"
#include "evret/truth_value.hpp"

using namespace evret;

namespace {

FuzzyValue triangle(double peak) {
    FuzzyValue f;
    f.mu.resize(kGridSize);
    for (int i = 0; i < kGridSize; ++i) {
        double x = grid_x(i);
        f.mu[i] = x <= peak ? (peak == 0.0 ? (i == 0 ? 1.0 : 0.0) : x / peak)
                            : (1.0 - x) / (1.0 - peak);
    }
    return f;
}

}  // namespace

TEST_SUITE("truth-values") {

TEST_CASE("validation accepts in-range values and names violations") {
    CHECK_FALSE(check_valid(IntervalValue{0.2, 0.6}).has_value());
    CHECK_FALSE(check_valid(ScalarValue{0.0}).has_value());
    CHECK_FALSE(check_valid(ScalarValue{1.0}).has_value());

    auto bad_order = check_valid(IntervalValue{0.7, 0.3});
    REQUIRE(bad_order.has_value());
    CHECK(bad_order->find("exceeds") != std::string::npos);

    auto too_big = check_valid(ScalarValue{1.2});
    REQUIRE(too_big.has_value());
    CHECK(too_big->find("[0,1]") != std::string::npos);

    CHECK(check_valid(IntervalValue{-0.1, 0.5}).has_value());

    FuzzyValue short_vec;
    short_vec.mu = {0.0, 1.0};
    CHECK(check_valid(short_vec).has_value());

    FuzzyValue dipped;
    dipped.mu.assign(kGridSize, 1.0);
    dipped.mu[50] = 0.2;  // strict interior minimum
    CHECK(check_valid(dipped).has_value());
}

TEST_CASE("rank keys: scalar identity, interval lower bound, fuzzy centroid") {
    CHECK(rank_key(ScalarValue{0.8}) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(rank_key(IntervalValue{0.4, 0.9}) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(secondary_key(IntervalValue{0.4, 0.9}) == doctest::Approx(0.9).epsilon(1e-12));
    // symmetric triangle: centroid forced to the axis of symmetry
    CHECK(rank_key(triangle(0.5)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("every registered preset has valid extremes with ranks 0 and 1") {
    for (const auto& id : registered_presets()) {
        CAPTURE(id);
        auto calc = make_calculus(id);
        CHECK_FALSE(check_valid(calc->top()).has_value());
        CHECK_FALSE(check_valid(calc->bottom()).has_value());
        CHECK(calc->rank(calc->top()) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(calc->rank(calc->bottom()) == doctest::Approx(0.0).epsilon(1e-12));
        if (auto u = calc->unknown()) CHECK_FALSE(check_valid(*u).has_value());
        if (calc->family() == Family::Scalar) CHECK_FALSE(calc->unknown().has_value());
    }
}

TEST_CASE("interval rank order respects simultaneous endpoint dominance") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 2000; ++k) {
        double a1 = u(rng), b1 = u(rng), a2 = u(rng), b2 = u(rng);
        if (a1 > b1) std::swap(a1, b1);
        if (a2 > b2) std::swap(a2, b2);
        if (a1 <= a2 && b1 <= b2) {
            CHECK(rank_key(IntervalValue{a1, b1}) <= rank_key(IntervalValue{a2, b2}));
            if (rank_key(IntervalValue{a1, b1}) == rank_key(IntervalValue{a2, b2}))
                CHECK(secondary_key(IntervalValue{a1, b1}) <=
                      secondary_key(IntervalValue{a2, b2}));
        }
    }
}

TEST_CASE("convexity: monotone and single-peaked pass, strict dips fail") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    std::vector<double> rising(kGridSize), falling(kGridSize);
    for (int i = 0; i < kGridSize; ++i) {
        rising[i] = static_cast<double>(i) / (kGridSize - 1);
        falling[i] = 1.0 - rising[i];
    }
    CHECK(fuzzy_is_convex(rising));
    CHECK(fuzzy_is_convex(falling));

    for (int k = 0; k < 200; ++k) {
        CHECK(fuzzy_is_convex(triangle(u(rng)).mu));
    }

    std::vector<double> dip(kGridSize, 0.8);
    dip[40] = 0.1;
    CHECK_FALSE(fuzzy_is_convex(dip));

    // hull: convex, pointwise >= input, fixes the dip
    FuzzyValue f;
    f.mu = dip;
    FuzzyValue h = fuzzy_convex_hull(f);
    CHECK(fuzzy_is_convex(h.mu));
    for (int i = 0; i < kGridSize; ++i) CHECK(h.mu[i] >= f.mu[i]);
    CHECK(h.mu[40] == doctest::Approx(0.8));
}

TEST_CASE("fuzzy helpers: singleton, rectangle, support, centroid") {
    FuzzyValue s = fuzzy_singleton(0.37);
    CHECK(s.mu[37] == 1.0);
    CHECK(fuzzy_centroid(s.mu) == doctest::Approx(0.37).epsilon(1e-12));
    CHECK(*fuzzy_support_lo(s.mu) == doctest::Approx(0.37));
    CHECK(*fuzzy_support_hi(s.mu) == doctest::Approx(0.37));

    FuzzyValue r = fuzzy_rectangle(0.2, 0.6);
    CHECK(r.mu[20] == 1.0);
    CHECK(r.mu[60] == 1.0);
    CHECK(r.mu[19] == 0.0);
    CHECK(r.mu[61] == 0.0);
    CHECK(fuzzy_centroid(r.mu) == doctest::Approx(0.4).epsilon(1e-9));

    FuzzyValue zero;
    zero.mu.assign(kGridSize, 0.0);
    CHECK(fuzzy_centroid(zero.mu) == 0.0);
    CHECK_FALSE(fuzzy_support_lo(zero.mu).has_value());
}

TEST_CASE("registry resolves presets and rejects unknown names") {
    auto godel = make_calculus("scalar.godel");
    CHECK(godel->family() == Family::Scalar);
    CHECK(rank_key(godel->conjoin(ScalarValue{0.3}, ScalarValue{0.7})) ==
          doctest::Approx(0.3));
    CHECK(rank_key(godel->disjoin(ScalarValue{0.3}, ScalarValue{0.7})) ==
          doctest::Approx(0.7));

    auto frechet = make_calculus("interval.frechet");
    CHECK(frechet->family() == Family::Interval);

    auto ling = make_calculus("linguistic:interval.support");
    CHECK(ling->family() == Family::Fuzzy);

    CHECK_THROWS_AS((void)make_calculus("scalar.bogus"), UnknownCalculusError);
    CHECK_THROWS_AS((void)make_calculus("interval.extension:nope"), UnknownCalculusError);
    CHECK_THROWS_AS((void)make_calculus(""), UnknownCalculusError);
}

TEST_CASE("canonical names round-trip through the registry") {
    for (const auto& id : registered_presets()) {
        CAPTURE(id);
        auto c = make_calculus(id);
        auto again = make_calculus(c->name());
        CHECK(again->name() == c->name());
        CHECK(again->family() == c->family());
    }
}

TEST_CASE("compact rendering names the family") {
    CHECK(render_compact(ScalarValue{0.25}) == "0.25");
    std::string iv = render_compact(IntervalValue{0.4, 0.9});
    CHECK(iv.find("0.4") != std::string::npos);
    CHECK(iv.find("0.9") != std::string::npos);
    std::string fz = render_compact(fuzzy_singleton(0.7));
    CHECK(fz.find("fuzzy") != std::string::npos);
}

}  // TEST_SUITE
