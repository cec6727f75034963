#include "permclass/avoiders.hpp"
#include "permclass/bound.hpp"
#include "permclass/grid.hpp"

#include <benchmark/benchmark.h>

using namespace permclass;

static void BM_count_avoiders_serial(benchmark::State& state) {
    auto basis = Basis::parse("1 3 2 4");
    for (auto _ : state) benchmark::DoNotOptimize(count_avoiders_serial(basis, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_count_avoiders_serial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_count_avoiders_parallel(benchmark::State& state) {
    auto basis = Basis::parse("1 3 2 4");
    for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(basis, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_count_avoiders_parallel)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_pair_table_serial(benchmark::State& state) {
    for (auto _ : state) {
        auto t = build_pair_table(static_cast<int>(state.range(0)), false);
        benchmark::DoNotOptimize(g_N(t, 0.7, 0.76));
    }
}
BENCHMARK(BM_pair_table_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_pair_table_parallel(benchmark::State& state) {
    for (auto _ : state) {
        auto t = build_pair_table(static_cast<int>(state.range(0)), true);
        benchmark::DoNotOptimize(g_N(t, 0.7, 0.76));
    }
}
BENCHMARK(BM_pair_table_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_gridded_oracle_serial(benchmark::State& state) {
    auto M = GridMatrix::parse("1 -1 0; 0 -1 1");
    for (auto _ : state)
        benchmark::DoNotOptimize(count_gridded_perms_oracle_serial(M, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_gridded_oracle_serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_gridded_oracle_parallel(benchmark::State& state) {
    auto M = GridMatrix::parse("1 -1 0; 0 -1 1");
    for (auto _ : state) benchmark::DoNotOptimize(count_gridded_perms_oracle(M, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_gridded_oracle_parallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
