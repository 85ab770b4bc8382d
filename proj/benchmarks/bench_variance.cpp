#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "linstat/expansion.hpp"
#include "linstat/kernel.hpp"
#include "linstat/pv.hpp"
#include "linstat/variance.hpp"

using namespace linstat;

namespace {

Poly make_poly(int degree) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> c(degree + 1);
    for (double& v : c) v = dist(rng);
    if (c[degree] == 0.0) c[degree] = 0.5;
    return Poly(std::move(c));
}

const WeightSpec kWeights[] = {
    WeightSpec::arcsine(-2.0, 2.0),
    WeightSpec::semicircle(0.0, 1.0),
    WeightSpec::hard_edge(1.0, 4.0),
    WeightSpec::jacobi(0.2, 0.7),
};

}  // namespace

static void BM_ClosedFormVariance(benchmark::State& state) {
    const Poly f = make_poly(static_cast<int>(state.range(0)));
    const WeightSpec& w = kWeights[state.range(1)];
    for (auto _ : state) {
        benchmark::DoNotOptimize(variance(f, w).value);
    }
}
BENCHMARK(BM_ClosedFormVariance)
    ->ArgsProduct({{4, 8, 16, 32}, {0, 1, 2, 3}})
    ->ArgNames({"K", "weight"});

static void BM_VarianceOracle(benchmark::State& state) {
    const Poly f = make_poly(static_cast<int>(state.range(0)));
    const AffineMap interval(0.25, 2.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(variance_oracle(f, interval));
    }
}
BENCHMARK(BM_VarianceOracle)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->ArgName("K");

static void BM_BuildKernel(benchmark::State& state) {
    const WeightSpec w = WeightSpec::jacobi(0.2, 0.7);
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_kernel(w, K));
    }
}
BENCHMARK(BM_BuildKernel)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->ArgName("K");

static void BM_DiagonalizeGeneral(benchmark::State& state) {
    const KernelMatrix R = build_kernel(WeightSpec::jacobi(0.2, 0.7), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize_general(R));
    }
}
BENCHMARK(BM_DiagonalizeGeneral)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->ArgName("K");

static void BM_ExpandInBasis(benchmark::State& state) {
    const Poly f = make_poly(static_cast<int>(state.range(0)));
    const WeightSpec w = WeightSpec::hard_edge(1.0, 4.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_in_weight_basis(f, w));
    }
}
BENCHMARK(BM_ExpandInBasis)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->ArgName("K");

BENCHMARK_MAIN();
