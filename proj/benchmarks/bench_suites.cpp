#include <benchmark/benchmark.h>

#include "paramodular/rowsuite.hpp"
#include "paramodular/transfer.hpp"

using namespace paramodular;

static void TableRowSuite(benchmark::State& state) {
    for (auto _ : state) {
        auto results = run_table_suite();
        benchmark::DoNotOptimize(results);
    }
}
BENCHMARK(TableRowSuite)->Unit(benchmark::kMillisecond);

static void EigenvalueFormulaSuite(benchmark::State& state) {
    for (auto _ : state) {
        auto results = run_formula_suite();
        benchmark::DoNotOptimize(results);
    }
}
BENCHMARK(EigenvalueFormulaSuite)->Unit(benchmark::kMillisecond);

static void GlobalReport(benchmark::State& state) {
    HilbertFormInput in;
    in.field = QuadField::make(5);
    in.n = 1;
    in.places.push_back({2, 1, 1, std::nullopt, RingElt::variable("s2")});
    in.places.push_back({3, 1, 1, std::nullopt, RingElt::variable("s3")});
    GL2Rep sc = GL2Rep::supercuspidal(LocalField::extension(5, 1), "sigma5", 2, 1);
    sc.galois_invariant = false;
    in.places.push_back({5, 1, 2, sc, std::nullopt});
    for (auto _ : state) {
        SiegelFormReport rep = global_report(in);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(GlobalReport)->Unit(benchmark::kMicrosecond);

static void SplittingSweep(benchmark::State& state) {
    QuadField f = QuadField::make(5);
    for (auto _ : state) {
        int splits = 0;
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L})
            splits += splitting_type(f, p).type == SplitType::Split;
        benchmark::DoNotOptimize(splits);
    }
}
BENCHMARK(SplittingSweep);

BENCHMARK_MAIN();
