#include <benchmark/benchmark.h>

#include "cyclepat/enumerate.hpp"
#include "cyclepat/gf_catalog.hpp"
#include "cyclepat/series.hpp"

using namespace cyclepat;

static void BM_GenerateCycleConstrained(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        for_each_cycle_constrained(n, {1, 2, 3}, [&](const Permutation&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_GenerateCycleConstrained)->Arg(8)->Arg(9)->Arg(10);

static void BM_CountAvoiders(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Permutation patt = Permutation::parse("231");
    for (auto _ : state) {
        Int c = count_avoiders(n, {1, 2, 3}, patt);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CountAvoiders)->Arg(9)->Arg(10)->Arg(11);

static void BM_SeriesMul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedSeries a = catalan_series(order);
    TruncatedSeries b = compose_power(a, 2);
    for (auto _ : state) {
        TruncatedSeries c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(60)->Arg(120)->Arg(240);

static void BM_SqrtSeries(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedSeries c3 = compose_power(catalan_series(order), 3);
    TruncatedSeries inner = c3 * (TruncatedSeries::constant(order, 4) - c3.scaled(3));
    for (auto _ : state) {
        TruncatedSeries s = sqrt_series(inner);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SqrtSeries)->Arg(60)->Arg(120)->Arg(240);

static void BM_B231(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WeightedSeries3 b = b231(bound);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_B231)->Arg(10)->Arg(14)->Arg(18);

BENCHMARK_MAIN();
