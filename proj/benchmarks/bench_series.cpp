#include <benchmark/benchmark.h>

#include <opsome/partitions.hpp>
#include <opsome/theta.hpp>

using namespace opsome;

namespace
{

void BM_MulDense(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = overline_p_series(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(f, f));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulDense)->RangeMultiplier(2)->Range(256, 2048)->Complexity()->Unit(benchmark::kMillisecond);

void BM_InverseSparse(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto phi_m = theta::phi(theta::Sign::minus, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse(phi_m));
    }
}
BENCHMARK(BM_InverseSparse)->RangeMultiplier(2)->Range(512, 4096)->Unit(benchmark::kMillisecond);

void BM_SomeBarExact(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(some_bar_series(n));
    }
}
BENCHMARK(BM_SomeBarExact)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_SomeBarClosed(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(some_bar_series_closed(n));
    }
}
BENCHMARK(BM_SomeBarClosed)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_SomeBarResidue(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(some_bar_series_mod(n, 4096));
    }
}
BENCHMARK(BM_SomeBarResidue)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Enumeration(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(some_bar_oracle(n));
    }
}
BENCHMARK(BM_Enumeration)->DenseRange(20, 35, 5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
