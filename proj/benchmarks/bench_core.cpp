#include <benchmark/benchmark.h>

#include <random>

#include "hadex/hadamard.hpp"
#include "hadex/nae.hpp"

namespace {

using hadex::Matrix;
using hadex::Rational;

// n x k matrix whose rows each take `colors` distinct small values.
Matrix random_matrix(std::size_t n, std::size_t k, std::int64_t colors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, colors - 1);
  Matrix m(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = Rational(pick(rng) + 1, 3);
  }
  return m;
}

void BM_HadamardExtension(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 6, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hadex::hadamard_extension(m));
}
BENCHMARK(BM_HadamardExtension)->DenseRange(4, 12, 4);

void BM_FoldRank(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 6, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hadex::full_extension_rank(m));
}
BENCHMARK(BM_FoldRank)->DenseRange(4, 12, 4);

void BM_MaterializedRank(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 6, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hadex::materialized_extension_rank(m));
}
BENCHMARK(BM_MaterializedRank)->DenseRange(4, 12, 4);

void BM_GreedyMinRows(benchmark::State& state) {
  const Matrix m = random_matrix(12, static_cast<std::size_t>(state.range(0)), 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hadex::greedy_min_rows(m));
}
BENCHMARK(BM_GreedyMinRows)->DenseRange(4, 10, 3);

void BM_EpsBar(benchmark::State& state) {
  const Matrix m = random_matrix(16, static_cast<std::size_t>(state.range(0)), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hadex::eps_bar(m));
}
BENCHMARK(BM_EpsBar)->DenseRange(6, 18, 6);

void BM_NaeRestrict(benchmark::State& state) {
  // Rows with pairwise distinct entries always satisfy the NAE condition.
  const auto k = static_cast<std::size_t>(state.range(0));
  Matrix m(2 * k, k);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = Rational(static_cast<std::int64_t>(j * (i + 1)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(hadex::nae_restrict(m));
}
BENCHMARK(BM_NaeRestrict)->DenseRange(4, 12, 4);

}  // namespace
BENCHMARK_MAIN();
