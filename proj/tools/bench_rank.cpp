// Compares the engine's ranking loop (memoized graph, OpenMP over documents,
// pruning) against the serial unrolled-tree reference evaluator on the
// bundled fixtures.

#include <benchmark/benchmark.h>

#include <memory>

#include "evret/ranking.hpp"
#include "reference_eval.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

struct Fixture {
    evret::Rulebase rb;
    evret::InferenceGraph graph;
    evret::Corpus corpus;
    evret::TermDictionary dict;
    std::unique_ptr<const evret::Calculus> calc;
    std::string goal = "Terrorism";

    Fixture() {
        std::string dir = EVRET_FIXTURE_DIR;
        rb = evret::parse_rules_file(dir + "/terrorism.rules");
        graph = evret::expand(rb, goal);
        corpus = evret::ingest(dir + "/corpus");
        dict = evret::TermDictionary::from_file(dir + "/terms.txt");
        calc = evret::make_calculus("scalar.godel");
    }
};

Fixture& fix() {
    static Fixture f;
    return f;
}

evret::RankOptions engine_options() {
    evret::RankOptions opt;
    opt.theta = 0.3;
    opt.dict = &fix().dict;
    opt.defuzzify = true;
    return opt;
}

void BM_reference_serial(benchmark::State& state) {
    Fixture& f = fix();
    evret::reference::Options opt;
    opt.dict = &f.dict;
    opt.defuzzify = true;
    for (auto _ : state) {
        auto rows = evret::reference::rank_all(f.rb, f.goal, f.corpus, *f.calc, opt);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_reference_serial);

void BM_engine(benchmark::State& state) {
#ifdef _OPENMP
    omp_set_num_threads(static_cast<int>(state.range(0)));
#endif
    Fixture& f = fix();
    evret::RankOptions opt = engine_options();
    for (auto _ : state) {
        auto r = evret::rank(f.corpus, f.graph, *f.calc, opt);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_engine)->Arg(1)->Arg(2)->Arg(4)->ArgName("threads");

void BM_engine_noprune(benchmark::State& state) {
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    Fixture& f = fix();
    evret::RankOptions opt = engine_options();
    opt.prune = false;
    for (auto _ : state) {
        auto r = evret::rank(f.corpus, f.graph, *f.calc, opt);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_engine_noprune);

}  // namespace

BENCHMARK_MAIN();
