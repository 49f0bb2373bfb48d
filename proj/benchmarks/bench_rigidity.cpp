#include <benchmark/benchmark.h>

#include <random>

#include "rigiscope/polytopes.hpp"
#include "rigiscope/transfer.hpp"

using namespace rigiscope;

namespace {

Framework random_flat(int n, int v, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 0.3);
    Framework fw;
    fw.geometry = GeometrySpec::euclidean(n);
    fw.convention = Convention::Model;
    fw.graph.vertex_count = v;
    std::bernoulli_distribution pick(0.5);
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            if (pick(rng)) fw.graph.edges.push_back({i, j});
        }
    }
    for (int i = 0; i < v; ++i) {
        Vector p(n);
        for (int c = 0; c < n; ++c) p(c) = gauss(rng);
        fw.points.push_back(p);
    }
    return fw;
}

void BM_RigidityMatrix(benchmark::State& state) {
    const Framework fw = random_flat(3, static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rigidity_matrix_euclidean(fw));
    }
}
BENCHMARK(BM_RigidityMatrix)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_NumericRank(benchmark::State& state) {
    const Framework fw = random_flat(3, static_cast<int>(state.range(0)), 43);
    const Matrix m = rigidity_matrix_euclidean(fw).values;
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_rank(m));
    }
}
BENCHMARK(BM_NumericRank)->Arg(8)->Arg(16)->Arg(32);

void BM_Verdict_Octahedron(benchmark::State& state) {
    const Framework octa = canonical_polytope("octahedron", GeometrySpec::euclidean(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rigidity_verdict(octa));
    }
}
BENCHMARK(BM_Verdict_Octahedron);

void BM_VerifyFactorization(benchmark::State& state) {
    const Framework fw = random_flat(3, static_cast<int>(state.range(0)), 44);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_factorization(fw, -1));
    }
}
BENCHMARK(BM_VerifyFactorization)->Arg(8)->Arg(16)->Arg(32);

void BM_TransferFramework(benchmark::State& state) {
    const Framework fw = random_flat(3, 32, 45);
    const GeometrySpec target = GeometrySpec::sphere(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(transfer_framework(fw, target));
    }
}
BENCHMARK(BM_TransferFramework);

}  // namespace

BENCHMARK_MAIN();
