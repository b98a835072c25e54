#include "zetalab/bounds.hpp"
#include "zetalab/divisor.hpp"
#include "zetalab/zeta.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_DivisorSieve(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto tab = zetalab::DivisorTable::sieve(n, 1);
        benchmark::DoNotOptimize(tab.prefix(n));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DivisorSieve)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_HyperbolaPrefix(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zetalab::divisor_prefix_hyperbola(x));
}
BENCHMARK(BM_HyperbolaPrefix)->Arg(1000000)->Arg(100000000);

void BM_RiemannSiegel(benchmark::State& state) {
    const auto t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zetalab::zeta_half_rs(t));
}
BENCHMARK(BM_RiemannSiegel)->Arg(1000)->Arg(100000)->Arg(10000000);

void BM_EulerMaclaurin(benchmark::State& state) {
    const auto t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zetalab::zeta_half_em(t));
}
BENCHMARK(BM_EulerMaclaurin)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_DeriveBound(benchmark::State& state) {
    zetalab::FactDatabase db;
    const int denom = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto d = zetalab::derive_mixed_bound(2, 2, db, static_cast<unsigned>(denom));
        benchmark::DoNotOptimize(d.result.growth);
    }
}
BENCHMARK(BM_DeriveBound)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
