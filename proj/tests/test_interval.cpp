#include <doctest.h>

#include <cmath>
#include <random>

#include "evret/errors.hpp"
#include "evret/interval_calculus.hpp"
#include "oracles.hpp"

using namespace evret;

namespace {

const IntervalPreset kFrechet{IntervalVariant::Frechet, {}};
const IntervalPreset kSupport{IntervalVariant::Support, {}};
const IntervalPreset kMpmt{IntervalVariant::Mpmt, {}};

IntervalPreset extension(TNorm t, DetachOp d) {
    return {IntervalVariant::Extension, {t, d, CombineOp::ProbSum}};
}

bool approx_iv(IntervalValue a, IntervalValue b, double tol) {
    return std::abs(a.lo - b.lo) <= tol && std::abs(a.hi - b.hi) <= tol;
}

std::mt19937& rng() {
    static std::mt19937 gen(99);
    return gen;
}

IntervalValue random_interval() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(rng()), b = u(rng());
    if (a > b) std::swap(a, b);
    return {a, b};
}

}  // namespace

TEST_SUITE("interval-calculi") {

TEST_CASE("conjunction at pinned points, checked against enumeration") {
    static const oracle::FrechetTables tables;

    IntervalValue a{0.6, 0.9}, b{0.5, 0.8};
    IntervalValue got = interval_conjoin(kFrechet, a, b);
    CHECK(approx_iv(got, {0.1, 0.8}, 1e-12));
    CHECK(approx_iv(got, tables.conjoin(a, b), 0.01));

    CHECK(approx_iv(interval_conjoin(kSupport, a, b), {0.30, 0.72}, 1e-12));

    for (int iv = 0; iv <= 100; iv += 5) {
        for (int iw = 0; iw <= 100; iw += 5) {
            double v = iv / 100.0, w = iw / 100.0;
            IntervalValue r =
                interval_conjoin(extension(TNorm::Min, DetachOp::Goguen), {v, v}, {w, w});
            CHECK(r.lo == std::min(v, w));
            CHECK(r.hi == std::min(v, w));
        }
    }
}

TEST_CASE("disjunction at pinned points") {
    static const oracle::FrechetTables tables;

    IntervalValue a{0.6, 0.9}, b{0.5, 0.8};
    IntervalValue got = interval_disjoin(kFrechet, a, b);
    CHECK(approx_iv(got, {0.6, 1.0}, 1e-12));
    CHECK(approx_iv(got, tables.disjoin(a, b), 0.01));

    CHECK(approx_iv(interval_disjoin(kSupport, {0.2, 0.4}, {0.3, 0.5}), {0.44, 0.70}, 1e-12));

    for (const auto& p : {kFrechet, kSupport, kMpmt,
                          extension(TNorm::Product, DetachOp::Goguen)}) {
        for (int k = 0; k < 200; ++k) {
            IntervalValue x = random_interval();
            CHECK(approx_iv(interval_disjoin(p, {0.0, 0.0}, x), x, 1e-12));
        }
    }
}

TEST_CASE("negation complements and is an involution") {
    CHECK(approx_iv(interval_negate({0.2, 0.6}), {0.4, 0.8}, 1e-12));
    CHECK(approx_iv(interval_negate({0.0, 1.0}), {0.0, 1.0}, 1e-12));
    CHECK(approx_iv(interval_negate({1.0, 1.0}), {0.0, 0.0}, 1e-12));
    for (int k = 0; k < 1000; ++k) {
        IntervalValue x = random_interval();
        IntervalValue back = interval_negate(interval_negate(x));
        CHECK(back.lo == doctest::Approx(x.lo).epsilon(1e-15));
        CHECK(back.hi == doctest::Approx(x.hi).epsilon(1e-15));
    }
}

TEST_CASE("detachment: support matches the conditional-probability extremes") {
    IntervalValue body{0.8, 1.0}, weight{0.9, 1.0};
    IntervalValue got = interval_detach(kSupport, body, weight);
    CHECK(approx_iv(got, {0.72, 1.0}, 1e-12));
    CHECK(approx_iv(got, oracle::support_detach(body, weight), 1e-9));

    for (int k = 0; k < 200; ++k) {
        // 0.05-step inputs so the oracle grid passes through the endpoints
        auto snap = [](IntervalValue v) {
            return IntervalValue{std::round(v.lo * 20.0) / 20.0,
                                 std::round(v.hi * 20.0) / 20.0};
        };
        IntervalValue b = snap(random_interval()), w = snap(random_interval());
        CHECK(approx_iv(interval_detach(kSupport, b, w), oracle::support_detach(b, w), 1e-9));
    }
}

TEST_CASE("detachment: certain antecedent passes the weight through") {
    for (int k = 0; k < 200; ++k) {
        IntervalValue w = random_interval();
        CHECK(approx_iv(interval_detach(kFrechet, {1.0, 1.0}, w), w, 1e-12));
    }
}

TEST_CASE("detachment: two-directional variant matches its feasibility oracle") {
    IntervalValue got = interval_detach(kMpmt, {0.7, 0.9}, {0.8, 0.9});
    CHECK(approx_iv(got, {0.5, 0.8}, 1e-12));
    auto want = oracle::mpmt_detach({0.7, 0.9}, {0.8, 0.9});
    REQUIRE(want.has_value());
    CHECK(approx_iv(got, *want, 1e-9));

    // infeasible: no consequent value is compatible with the weight bounds
    CHECK_FALSE(oracle::mpmt_detach({0.8, 0.9}, {0.0, 0.05}).has_value());
    CHECK_THROWS_AS((void)interval_detach(kMpmt, {0.8, 0.9}, {0.0, 0.05}),
                    InconsistentEvidenceError);
}

TEST_CASE("combination at pinned points") {
    static const oracle::FrechetTables tables;

    IntervalValue got = interval_combine(kFrechet, {0.3, 0.5}, {0.4, 0.6});
    CHECK(approx_iv(got, {0.4, 1.0}, 1e-12));
    CHECK(approx_iv(got, tables.disjoin({0.3, 0.5}, {0.4, 0.6}), 0.01));

    CHECK(approx_iv(interval_combine(kSupport, {0.5, 0.5}, {0.5, 0.5}), {0.75, 0.75}, 1e-12));

    for (const auto& p : {kFrechet, kSupport, kMpmt,
                          extension(TNorm::Lukasiewicz, DetachOp::Lukasiewicz)}) {
        for (int k = 0; k < 200; ++k) {
            IntervalValue x = random_interval();
            CHECK(approx_iv(interval_combine(p, {0.0, 0.0}, x), x, 1e-12));
        }
    }
}

TEST_CASE("closure: every operation returns a valid interval") {
    std::vector<IntervalPreset> presets = {kFrechet, kSupport, kMpmt};
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz})
        presets.push_back(extension(t, DetachOp::Goguen));

    std::vector<std::pair<IntervalValue, IntervalValue>> cases;
    for (int k = 0; k < 10000; ++k) cases.emplace_back(random_interval(), random_interval());
    const double ends[] = {0.0, 1.0};
    for (double a : ends)
        for (double b : ends)
            for (double c : ends)
                for (double d : ends) {
                    if (a <= b && c <= d) cases.push_back({{a, b}, {c, d}});
                }

    auto ok = [](IntervalValue v) {
        return v.lo >= -1e-12 && v.hi <= 1.0 + 1e-12 && v.lo <= v.hi + 1e-12;
    };
    for (const auto& p : presets) {
        CAPTURE(std::string(interval_variant_name(p.variant)));
        for (const auto& [x, y] : cases) {
            CHECK(ok(interval_conjoin(p, x, y)));
            CHECK(ok(interval_disjoin(p, x, y)));
            CHECK(ok(interval_negate(x)));
            CHECK(ok(interval_combine(p, x, y)));
            try {
                IntervalValue dv = interval_detach(p, x, y);
                CHECK(ok(dv));
            } catch (const InconsistentEvidenceError&) {
                // empty feasible set is a legal outcome for the mpmt variant
                CHECK(p.variant == IntervalVariant::Mpmt);
            }
        }
    }
}

TEST_CASE("independence bounds refine the distribution-free bounds") {
    for (int k = 0; k < 10000; ++k) {
        IntervalValue x = random_interval(), y = random_interval();
        IntervalValue fc = interval_conjoin(kFrechet, x, y);
        IntervalValue sc = interval_conjoin(kSupport, x, y);
        CHECK(sc.lo >= fc.lo - 1e-12);
        CHECK(sc.hi <= fc.hi + 1e-12);
        IntervalValue fd = interval_disjoin(kFrechet, x, y);
        IntervalValue sd = interval_disjoin(kSupport, x, y);
        CHECK(sd.lo >= fd.lo - 1e-12);
        CHECK(sd.hi <= fd.hi + 1e-12);
    }
}

TEST_CASE("degenerate intervals reduce the endpoint extension to its scalar preset") {
    for (TNorm t : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz}) {
        for (DetachOp d : {DetachOp::Lukasiewicz, DetachOp::Godel, DetachOp::Goguen,
                           DetachOp::KleeneDienes}) {
            IntervalPreset p = extension(t, d);
            CAPTURE(std::string(tnorm_name(t)));
            CAPTURE(std::string(detach_name(d)));
            for (int iv = 0; iv <= 100; iv += 2) {
                for (int iw = 0; iw <= 100; iw += 2) {
                    double v = iv / 100.0, w = iw / 100.0;
                    IntervalValue vv{v, v}, ww{w, w};
                    CHECK(interval_conjoin(p, vv, ww).lo == tnorm_apply(t, v, w));
                    CHECK(interval_disjoin(p, vv, ww).lo == conorm_apply(t, v, w));
                    CHECK(interval_negate(vv).lo == negate_scalar(v));
                    CHECK(interval_detach(p, vv, ww).lo == detach_scalar(d, v, w));
                    CHECK(interval_combine(p, vv, ww).lo ==
                          combine_scalar(CombineOp::ProbSum, v, w));
                }
            }
        }
    }
}

}  // TEST_SUITE
