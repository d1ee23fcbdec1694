#include "twistgraph/closedform.hpp"
#include "twistgraph/fock.hpp"
#include "twistgraph/graphs.hpp"
#include "twistgraph/qubit.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace twistgraph;

void BM_PartitionRaw(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(graphs::partition_function_raw(k, n));
}
BENCHMARK(BM_PartitionRaw)->Args({1, 4})->Args({1, 8})->Args({2, 4})->Args({3, 3});

void BM_PartitionFast(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(graphs::partition_function_fast(k, n));
}
BENCHMARK(BM_PartitionFast)->Args({2, 6})->Args({3, 6})->Args({4, 6})->Args({4, 8})->Args({6, 8});

void BM_CoefficientPolynomial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(closedform::negativity_polynomial(k, n));
}
BENCHMARK(BM_CoefficientPolynomial)->Args({2, 6})->Args({3, 6})->Args({4, 6})->Args({6, 8});

void BM_DirectSum(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const RegionRatios r(Rational(1, 2), Rational(1, 4), Rational(1, 4));
    for (auto _ : state) benchmark::DoNotOptimize(qubit::negativity_direct_sum(k, n, r));
}
BENCHMARK(BM_DirectSum)->Args({2, 3})->Args({2, 4})->Args({3, 4});

void BM_WickOracle(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const fock::RegionLayout layout{2, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(fock::wick_oracle(k, n, layout));
}
BENCHMARK(BM_WickOracle)->Args({1, 6})->Args({2, 4})->Args({1, 8});

void BM_DensityMatrix(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const RegionRatios r(Rational(1, 2), Rational(1, 4), Rational(1, 4));
    for (auto _ : state) benchmark::DoNotOptimize(qubit::density_matrix_negativity(k, n, r));
}
BENCHMARK(BM_DensityMatrix)->Args({2, 4})->Args({6, 4})->Args({10, 4});

}  // namespace

BENCHMARK_MAIN();
