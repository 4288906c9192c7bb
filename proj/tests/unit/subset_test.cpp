#include <gtest/gtest.h>

#include "hadex/error.hpp"
#include "hadex/subset.hpp"

namespace hadex {
namespace {

TEST(SubsetIndex, IteratesMembersInIncreasingOrder) {
  const SubsetIndex s(10, 0b1010010001);
  EXPECT_EQ(s.members(), (std::vector<unsigned>{0, 4, 7, 9}));
  EXPECT_EQ(s.size(), 4U);
  EXPECT_TRUE(s.contains(7));
  EXPECT_FALSE(s.contains(5));
}

TEST(SubsetIndex, GroundSetCap) {
  EXPECT_NO_THROW(SubsetIndex::full(62));
  EXPECT_THROW(SubsetIndex(63, 0), GuardError);
  EXPECT_THROW(SubsetIndex(3, 0b1000), DomainError);
}

TEST(SubsetIndex, SetAlgebra) {
  const SubsetIndex a = SubsetIndex::of(5, {0, 1, 2});
  const SubsetIndex b = SubsetIndex::of(5, {2, 3});
  EXPECT_EQ(a | b, SubsetIndex::of(5, {0, 1, 2, 3}));
  EXPECT_EQ(a & b, SubsetIndex::of(5, {2}));
  EXPECT_EQ(a - b, SubsetIndex::of(5, {0, 1}));
  EXPECT_EQ(a.complement(), SubsetIndex::of(5, {3, 4}));
  EXPECT_TRUE((a & b).is_subset_of(a));
}

TEST(SubsetIndex, CardinalityOrder) {
  const auto order = subsets_by_cardinality(3);
  std::vector<std::uint64_t> masks;
  for (const auto& s : order) masks.push_back(s.bits());
  EXPECT_EQ(masks, (std::vector<std::uint64_t>{0, 1, 2, 4, 3, 5, 6, 7}));
  EXPECT_THROW(subsets_by_cardinality(21), GuardError);
}

TEST(SubsetIndex, FixedSizeSubsetsAscending) {
  const auto pairs = subsets_of_size(4, 2);
  std::vector<std::uint64_t> masks;
  for (const auto& s : pairs) masks.push_back(s.bits());
  EXPECT_EQ(masks, (std::vector<std::uint64_t>{3, 5, 6, 9, 10, 12}));
  EXPECT_EQ(subsets_of_size(4, 0).size(), 1U);
  EXPECT_TRUE(subsets_of_size(3, 4).empty());
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned r = 0; r <= n; ++r) ASSERT_EQ(subsets_of_size(n, r).size(), binomial(n, r));
  }
}

TEST(SubsetIndex, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10U);
  EXPECT_EQ(binomial(62, 31), 465428353255261088ULL);
  EXPECT_EQ(binomial(3, 5), 0U);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

}  // namespace
}  // namespace hadex
