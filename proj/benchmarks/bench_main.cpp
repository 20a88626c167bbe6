#include <benchmark/benchmark.h>

#include <random>

#include "abcover/generators.hpp"
#include "abcover/gf2.hpp"
#include "abcover/group_ring.hpp"
#include "abcover/taut_complex.hpp"

using namespace abcover;

static void BM_Gf2Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  gf2::BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() & 1) m.set(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(gf2::rank(m));
}
BENCHMARK(BM_Gf2Rank)->Arg(64)->Arg(256)->Arg(1024);

static void BM_PetersenLevel(benchmark::State& state) {
  const auto g = graph::petersen_d5();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    complex::GraphComplex gc(g);
    benchmark::DoNotOptimize(complex::betti_gk(gc, k));
  }
}
BENCHMARK(BM_PetersenLevel)->DenseRange(1, 5);

static void BM_LadderTaut(benchmark::State& state) {
  const auto g = graph::mobius_d4(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    complex::GraphComplex gc(g);
    benchmark::DoNotOptimize(complex::is_k_taut(gc, 4));
  }
}
BENCHMARK(BM_LadderTaut)->Arg(4)->Arg(8)->Arg(16);

static void BM_JkLattice(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::IntegerLattice::generated_by(
      std::size_t{1} << d, [&] {
        std::vector<std::vector<oracle::Integer>> rows;
        for (const auto& b : oracle::jk_basis(d, d)) rows.push_back(b.coeffs());
        return rows;
      }()));
}
BENCHMARK(BM_JkLattice)->DenseRange(2, 5);
BENCHMARK_MAIN();
