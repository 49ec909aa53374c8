#include <benchmark/benchmark.h>

#include <isobar/kernels.hpp>
#include <isobar/roots.hpp>
#include <isobar/wip.hpp>

namespace
{

using namespace isobar;

kernels::CoefficientFn wip_fn()
{
    static const WeightVector omega = WeightVector::naturals();
    return [](const ExponentVector &alpha) { return wip_coefficient(alpha, omega); };
}

kernels::CoefficientFn root_fn()
{
    static const WeightVector omega = WeightVector::naturals();
    static const Rational q = make_rational(-2, 3);
    return [](const ExponentVector &alpha) { return l_coefficient(alpha, omega, q); };
}

void tabulate_wip_serial(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::tabulate_serial(n, n, wip_fn()));
    }
}

void tabulate_wip_parallel(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::tabulate_parallel(n, n, wip_fn()));
    }
}

void tabulate_root_serial(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::tabulate_serial(n, n, root_fn()));
    }
}

void tabulate_root_parallel(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::tabulate_parallel(n, n, root_fn()));
    }
}

void multiply_serial(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const auto p = wip(n, n, WeightVector::ones());
    const auto q = wip(n, n, WeightVector::naturals());
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::multiply_serial(p, q));
    }
}

void multiply_parallel(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const auto p = wip(n, n, WeightVector::ones());
    const auto q = wip(n, n, WeightVector::naturals());
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::multiply_parallel(p, q));
    }
}

} // namespace

BENCHMARK(tabulate_wip_serial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(tabulate_wip_parallel)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(tabulate_root_serial)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(tabulate_root_parallel)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(multiply_serial)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(multiply_parallel)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
