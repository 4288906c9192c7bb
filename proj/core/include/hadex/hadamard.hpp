#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "hadex/matrix.hpp"
#include "hadex/subset.hpp"
#include "hadex/subspace.hpp"

namespace hadex {

/// Largest n for which the 2^n-row extension is materialized.
inline constexpr unsigned kMaxExtensionRows = 20;
/// Largest number of candidate subsets an exhaustive scan will visit.
inline constexpr std::uint64_t kMaxSubsetScan = 1'000'000;

/// One row m_S of the Hadamard extension: the entrywise product of the rows
/// of m indexed by S. The empty subset gives the all-ones row.
struct HadamardRow {
  SubsetIndex subset;
  Vector values;
};

HadamardRow hadamard_row(const Matrix& m, const SubsetIndex& subset);

/// All 2^n rows m_S indexed by the bitmask of S. Throws GuardError when
/// n > kMaxExtensionRows.
std::vector<Vector> hadamard_rows_by_mask(const Matrix& m);

/// H(m): the 2^n x k matrix of all m_S, rows ordered by (|S|, bitmask).
/// Throws GuardError when n > kMaxExtensionRows.
Matrix hadamard_extension(const Matrix& m);

/// Row space of H(m|_chosen) for a growing set of chosen rows.
///
/// The space always contains the all-ones vector, and its dimension never
/// decreases as rows are added.
struct RowspaceState {
  SubsetIndex chosen_rows;
  Subspace space;

  /// State for R = ∅: span{1} in Q^k.
  static RowspaceState initial(const Matrix& m);
};

/// Row space of H(m|_{R ∪ {t}}), computed as span(U ∪ m_t ⊙ U) from the
/// current basis instead of materializing 2^|R| rows.
RowspaceState extend_rowspace(const RowspaceState& state, const Matrix& m, unsigned t);

/// rank H(m), by folding extend_rowspace over the rows of m in index order.
std::size_t full_extension_rank(const Matrix& m);

/// rank H(m), by materializing the extension and eliminating it.
std::size_t materialized_extension_rank(const Matrix& m);

struct NotFullRank {
  std::size_t rank;
  friend bool operator==(const NotFullRank&, const NotFullRank&) = default;
};

/// Either a row set R with H(m|_R) of full column rank, or the rank of H(m).
using GreedyResult = std::variant<SubsetIndex, NotFullRank>;

/// Greedy certificate search.
///
/// Starting from R = ∅, repeatedly adds the smallest-index row that strictly
/// increases dim rowspace H(m|_R). Since the starting dimension is 1 and each
/// step adds at least 1, a full-rank result has |R| <= k - 1. If no single
/// row helps, dim rowspace H(m|_R) already equals rank H(m), which is
/// returned as NotFullRank.
GreedyResult greedy_min_rows(const Matrix& m);

/// Every row subset of the given size whose extension has full column rank,
/// in ascending bitmask order. Throws GuardError if C(n, size) exceeds
/// kMaxSubsetScan.
std::vector<SubsetIndex> exhaustive_min_rows(const Matrix& m, unsigned size);

}  // namespace hadex
