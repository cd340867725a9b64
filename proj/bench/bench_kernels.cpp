#include <benchmark/benchmark.h>

#include <random>

#include "unip/fp_kernels.hpp"
#include "unip/oracle.hpp"
#include "unip/sweeps.hpp"

using namespace unip;

namespace {

FpMatrix random_matrix(std::size_t n, std::uint32_t p) {
    std::mt19937_64 rng(n * 31 + p);
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, entry(rng));
    return m;
}

void BM_rank_serial(benchmark::State &state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::rank_serial(m));
}

void BM_rank_omp(benchmark::State &state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::rank_omp(m));
}

void BM_multiply_serial(benchmark::State &state) {
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::multiply_serial(a, a));
}

void BM_multiply_omp(benchmark::State &state) {
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::multiply_omp(a, a));
}

void BM_pascal_jordan(benchmark::State &state) {
    const auto m = pascal_matrix(state.range(0), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(jordan_type_of_unipotent(m));
}

void BM_weyl_sweep(benchmark::State &state) {
    const auto exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_weyl(120, {2, 3, 5, 7}, exec));
}

void BM_irrep_sweep(benchmark::State &state) {
    const auto exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_irrep(1024, {3, 5}, 5, 128, exec));
}

} // namespace

BENCHMARK(BM_rank_serial)->Arg(128)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_omp)->Arg(128)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_serial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_omp)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pascal_jordan)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weyl_sweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_irrep_sweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
