#include <benchmark/benchmark.h>

#include "polyrep/bell.hpp"
#include "polyrep/polygonal.hpp"
#include "polyrep/repcount.hpp"
#include "polyrep/series.hpp"
#include "polyrep/verify.hpp"

using namespace polyrep;

static void BM_ThetaSeries(benchmark::State& state) {
    const PolygonalSpec spec(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_series(spec, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_ThetaSeries)->Arg(100)->Arg(500);

static void BM_TripleProduct(benchmark::State& state) {
    const PolygonalSpec spec(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(triple_product_series(spec, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_TripleProduct)->Arg(100)->Arg(500);

static void BM_ThetaPow(benchmark::State& state) {
    const TruncatedSeries theta = theta_series(PolygonalSpec(4), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pow(theta, 8));
    }
}
BENCHMARK(BM_ThetaPow)->Arg(60)->Arg(200);

static void BM_BuildTable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_table(PolygonalSpec(7), n, n));
    }
}
BENCHMARK(BM_BuildTable)->Arg(30)->Arg(60)->Arg(120);

static void BM_LogSeries(benchmark::State& state) {
    const TruncatedSeries theta = theta_series(PolygonalSpec(6), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log(theta));
    }
}
BENCHMARK(BM_LogSeries)->Arg(60)->Arg(200);

static void BM_BellTable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const TaylorCoeffs g = taylor_coeffs(PolygonalSpec(5), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(PartialBellTable(g.bell_arguments(), n));
    }
}
BENCHMARK(BM_BellTable)->Arg(20)->Arg(40);

static void BM_TheoremSweep(benchmark::State& state) {
    SuiteConfig config;
    config.identities = {IdentityKind::theorem1};
    config.n_max = state.range(0);
    config.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(config));
    }
}
BENCHMARK(BM_TheoremSweep)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
