#include <benchmark/benchmark.h>

#include <random>

#include "knroot/cone.hpp"
#include "knroot/kn.hpp"
#include "knroot/rootstack.hpp"

using namespace knroot;

namespace {

IntMatrix random_matrix(std::mt19937_64& eng, std::size_t n) {
    std::uniform_int_distribution<int> entry(-10, 10);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(eng);
    return m;
}

AffineMonoid a1() {
    return AffineMonoid::from_generators(
        2, {{Int(1), Int(0)}, {Int(1), Int(1)}, {Int(1), Int(2)}});
}

}  // namespace

static void BM_snf(benchmark::State& state) {
    std::mt19937_64 eng(1);
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(eng, state.range(0)));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(snf(inputs[k++ % inputs.size()]));
    }
}
BENCHMARK(BM_snf)->Arg(3)->Arg(6);

static void BM_hnf(benchmark::State& state) {
    std::mt19937_64 eng(2);
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(eng, state.range(0)));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hnf(inputs[k++ % inputs.size()]));
    }
}
BENCHMARK(BM_hnf)->Arg(3)->Arg(6);

static void BM_dual_description_orthant(benchmark::State& state) {
    const std::size_t d = state.range(0);
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < d; ++i) {
        IntVec e(d);
        e[i] = 1;
        rays.push_back(e);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(RationalCone::from_rays(d, rays));
    }
}
BENCHMARK(BM_dual_description_orthant)->Arg(3)->Arg(5);

static void BM_hilbert_basis(benchmark::State& state) {
    RationalCone cone = RationalCone::from_rays(
        2, {{Int(1), Int(0)}, {Int(1), Int(state.range(0))}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_basis(cone));
    }
}
BENCHMARK(BM_hilbert_basis)->Arg(3)->Arg(9);

static void BM_verify_charts(benchmark::State& state) {
    AffineMonoid p = a1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_chart_cartesian(p, state.range(0), 7, 1e-9));
    }
}
BENCHMARK(BM_verify_charts)->Arg(100);

static void BM_verify_cube(benchmark::State& state) {
    AffineMonoid p = a1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_cube(p, 3, state.range(0), 7, 1e-9));
    }
}
BENCHMARK(BM_verify_cube)->Arg(100);

BENCHMARK_MAIN();
