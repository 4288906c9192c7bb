#include <gtest/gtest.h>

#include "generators.hpp"
#include "hadex/error.hpp"
#include "hadex/hadamard.hpp"
#include "oracles.hpp"

namespace hadex {
namespace {

Matrix rows(std::initializer_list<Vector> r, std::size_t cols) { return Matrix::from_rows(r, cols); }

const Matrix kHamming = rows({{1, -1, 1, -1}, {1, 1, -1, -1}}, 4);
const Matrix kTwoRows012 = rows({{0, 1, 2}, {0, 1, 2}}, 3);

TEST(HadamardExtension, EmptyMatrixGivesOnesRow) {
  EXPECT_EQ(hadamard_extension(Matrix(0, 3)), rows({{1, 1, 1}}, 3));
}

TEST(HadamardExtension, HammingGivesFourierMatrix) {
  EXPECT_EQ(hadamard_extension(kHamming),
            rows({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}, 4));
}

TEST(HadamardExtension, RepeatedRowProducts) {
  EXPECT_EQ(hadamard_extension(kTwoRows012), rows({{1, 1, 1}, {0, 1, 2}, {0, 1, 2}, {0, 1, 4}}, 3));
}

TEST(HadamardExtension, RowOrderIsCardinalityThenBitmask) {
  testing::Rng rng(7);
  const Matrix m = testing::random_matrix(rng, 4, 3, testing::small_pool());
  const Matrix h = hadamard_extension(m);
  const auto order = subsets_by_cardinality(4);
  ASSERT_EQ(h.rows(), 16U);
  for (std::size_t r = 0; r < order.size(); ++r) {
    ASSERT_EQ(h.row_vector(r), testing::naive_extension_row(m, order[r].bits()));
    ASSERT_EQ(h.row_vector(r), hadamard_row(m, order[r]).values);
  }
}

TEST(HadamardExtension, Guard) {
  EXPECT_THROW(hadamard_extension(Matrix(21, 2)), GuardError);
  EXPECT_THROW(full_extension_rank(Matrix(21, 2)), GuardError);
}

TEST(ExtendRowspace, AddsProductsOfTheNewRow) {
  const Matrix m = rows({{0, 1, 2}}, 3);
  const RowspaceState start = RowspaceState::initial(m);
  EXPECT_EQ(start.space.dim(), 1U);
  const RowspaceState next = extend_rowspace(start, m, 0);
  EXPECT_EQ(next.space.dim(), 2U);
  EXPECT_EQ(next.space, Subspace::span({{1, 1, 1}, {0, 1, 2}}, 3));
  EXPECT_EQ(next.chosen_rows, SubsetIndex::of(1, {0}));
}

TEST(ExtendRowspace, ConstantRowAddsNothing) {
  const Matrix m = rows({{0, 1, 2}, {Rational(5, 3), Rational(5, 3), Rational(5, 3)}}, 3);
  const RowspaceState one = extend_rowspace(RowspaceState::initial(m), m, 0);
  EXPECT_EQ(extend_rowspace(one, m, 1).space, one.space);
}

TEST(ExtendRowspace, FullSpaceStaysFull) {
  const Matrix m = rows({{0, 1, 2}, {0, 1, 2}, {3, 1, 2}}, 3);
  RowspaceState s = RowspaceState::initial(m);
  s = extend_rowspace(s, m, 0);
  s = extend_rowspace(s, m, 1);
  ASSERT_EQ(s.space.dim(), 3U);
  EXPECT_EQ(extend_rowspace(s, m, 2).space.dim(), 3U);
}

TEST(ExtendRowspace, RejectsBadRows) {
  const Matrix m = rows({{0, 1}}, 2);
  const RowspaceState s = extend_rowspace(RowspaceState::initial(m), m, 0);
  EXPECT_THROW(extend_rowspace(s, m, 0), DomainError);
  EXPECT_THROW(extend_rowspace(s, m, 1), DomainError);
}

TEST(FullExtensionRank, Examples) {
  EXPECT_EQ(full_extension_rank(kHamming), 4U);
  // {(1,1,1),(0,1,2),(0,1,4)} has determinant 2.
  ASSERT_EQ(testing::cofactor_det(rows({{1, 1, 1}, {0, 1, 2}, {0, 1, 4}}, 3)), Rational(2));
  EXPECT_EQ(full_extension_rank(kTwoRows012), 3U);
  EXPECT_LT(full_extension_rank(rows({{1, 1, 2}, {3, 3, 5}, {0, 0, 7}}, 3)), 3U);
}

TEST(GreedyMinRows, Examples) {
  EXPECT_EQ(greedy_min_rows(kTwoRows012), GreedyResult(SubsetIndex::of(2, {0, 1})));
  EXPECT_EQ(greedy_min_rows(kHamming), GreedyResult(SubsetIndex::of(2, {0, 1})));
  EXPECT_EQ(greedy_min_rows(rows({{4, 4}}, 2)), GreedyResult(NotFullRank{1}));
}

TEST(GreedyMinRows, SkipsRowsThatDoNotHelp) {
  const Matrix m = rows({{7, 7, 7}, {0, 1, 2}, {0, 1, 2}}, 3);
  EXPECT_EQ(greedy_min_rows(m), GreedyResult(SubsetIndex::of(3, {1, 2})));
}

TEST(ExhaustiveMinRows, Examples) {
  EXPECT_EQ(exhaustive_min_rows(kTwoRows012, 2), std::vector<SubsetIndex>{SubsetIndex::of(2, {0, 1})});
  const Matrix dup = rows({{1, 1, 2}, {3, 3, 5}, {0, 0, 7}}, 3);
  for (unsigned size = 0; size <= 3; ++size) EXPECT_TRUE(exhaustive_min_rows(dup, size).empty());
  const Matrix three = rows({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, 3);
  EXPECT_EQ(exhaustive_min_rows(three, 2),
            (std::vector<SubsetIndex>{SubsetIndex::of(3, {0, 1}), SubsetIndex::of(3, {0, 2}),
                                      SubsetIndex::of(3, {1, 2})}));
  EXPECT_THROW(exhaustive_min_rows(three, 4), DomainError);
}

TEST(ExhaustiveMinRows, Guard) {
  EXPECT_THROW(exhaustive_min_rows(Matrix(40, 2), 20), GuardError);
}

class HadamardProperties : public ::testing::TestWithParam<int> {};

TEST_P(HadamardProperties, FoldMatchesMaterializedAndMinorOracle) {
  testing::Rng rng(500 + GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testing::uniform(rng, 0, 6);
    const std::size_t k = testing::uniform(rng, 1, 5);
    const Matrix m = testing::random_matrix(rng, n, k, testing::small_pool(), 4);
    const std::size_t fold = full_extension_rank(m);
    ASSERT_EQ(fold, materialized_extension_rank(m));
    if (n <= 3) {
      Matrix naive(0, k);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        naive.append_row(testing::naive_extension_row(m, s));
      }
      ASSERT_EQ(fold, testing::minor_rank(naive));
    }
  }
}

TEST_P(HadamardProperties, RowspaceIsMonotone) {
  testing::Rng rng(600 + GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = static_cast<unsigned>(testing::uniform(rng, 1, 6));
    const std::size_t k = testing::uniform(rng, 1, 5);
    const Matrix m = testing::random_matrix(rng, n, k, testing::small_pool(), 4);
    const SubsetIndex s(n, testing::uniform(rng, 0, (std::size_t{1} << n) - 1));
    const SubsetIndex t(n, testing::uniform(rng, 0, (std::size_t{1} << n) - 1));
    RowspaceState small = RowspaceState::initial(m);
    for (unsigned i : s) small = extend_rowspace(small, m, i);
    RowspaceState big = small;
    for (unsigned i : t - s) big = extend_rowspace(big, m, i);
    ASSERT_TRUE(big.space.contains(small.space));
    ASSERT_TRUE(small.space.contains(ones(k)));
  }
}

TEST_P(HadamardProperties, GreedyCertificatesAndStalls) {
  testing::Rng rng(700 + GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testing::uniform(rng, 0, 7);
    const std::size_t k = testing::uniform(rng, 1, 5);
    const Matrix m = testing::random_matrix(rng, n, k, testing::small_pool(), 4);
    const std::size_t rank = full_extension_rank(m);
    const GreedyResult g = greedy_min_rows(m);
    if (rank == k) {
      const auto* r = std::get_if<SubsetIndex>(&g);
      ASSERT_NE(r, nullptr);
      ASSERT_LE(r->size(), k - 1);
      ASSERT_EQ(full_extension_rank(m.restrict_rows(*r)), k);
      // Minimal exhaustive certificates are never larger than greedy ones.
      bool found = false;
      for (unsigned size = 0; size <= r->size() && !found; ++size) {
        found = !exhaustive_min_rows(m, size).empty();
      }
      ASSERT_TRUE(found);
    } else {
      ASSERT_EQ(g, GreedyResult(NotFullRank{rank}));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, HadamardProperties, ::testing::Range(0, 4));

}  // namespace
}  // namespace hadex
