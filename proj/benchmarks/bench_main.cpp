#include <cli.hpp>
#include <gaussquad/gausscf.hpp>
#include <gaussquad/numerics.hpp>
#include <gaussquad/rootfind.hpp>

#include <benchmark/benchmark.h>

using namespace gaussquad;

static void BM_LegendrePair(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(legendre_pair(m));
    }
}
BENCHMARK(BM_LegendrePair)->DenseRange(1, 13, 4);

static void BM_RealRoots(benchmark::State& state) {
    const RatPoly W = legendre_pair(static_cast<int>(state.range(0))).W;
    for (auto _ : state) {
        benchmark::DoNotOptimize(real_roots_symmetric(W, Digits{50}));
    }
}
BENCHMARK(BM_RealRoots)->DenseRange(1, 13, 4);

static void BM_GaussRule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Digits d{static_cast<int>(state.range(1))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_rule(n, d));
    }
}
BENCHMARK(BM_GaussRule)->ArgsProduct({{0, 3, 6, 9, 12}, {50, 200}});

static void BM_Ln(benchmark::State& state) {
    const ScopedPrecision scope(Digits{static_cast<int>(state.range(0))});
    const HPScalar x(150000L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hp_ln(x));
    }
}
BENCHMARK(BM_Ln)->Arg(50)->Arg(100)->Arg(500);

static void BM_ErrorCoefficients(benchmark::State& state) {
    const QuadRule rule = gauss_rule(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(error_coefficients(rule, 32));
    }
}
BENCHMARK(BM_ErrorCoefficients)->Arg(2)->Arg(6)->Arg(12);

static void BM_Demo(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::demo_rows(6, Digits{50}));
    }
}
BENCHMARK(BM_Demo)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
