#pragma once

#include <vector>

#include "hadex/matrix.hpp"
#include "hadex/subset.hpp"

namespace hadex {

/// Largest column count for which the 2^k column-subset scan is run.
inline constexpr unsigned kMaxDeficiencyColumns = 20;

/// Minimum deficiency over all nonempty column sets, with the witness.
///
/// eps_bar = |nae_rows_of_witness| - |witness_columns|, and witness_columns
/// is the smallest bitmask achieving the minimum.
struct NaeReport {
  int eps_bar = 0;
  SubsetIndex witness_columns;
  SubsetIndex nae_rows_of_witness;

  /// The NAE condition: eps_bar >= -1.
  bool satisfied() const { return eps_bar >= -1; }

  friend bool operator==(const NaeReport&, const NaeReport&) = default;
};

/// Rows of m that take at least two distinct values on `cols`.
SubsetIndex nae_rows(const Matrix& m, const SubsetIndex& cols);

/// |nae_rows(m, cols)| - |cols|.
int eps(const Matrix& m, const SubsetIndex& cols);

/// Scans every nonempty column subset. Throws GuardError when
/// k > kMaxDeficiencyColumns and DomainError when k = 0.
NaeReport eps_bar(const Matrix& m);

/// A set of exactly k-1 rows R with eps_bar(m|_R) = -1.
///
/// Follows the row-deletion induction: while more than k-1 rows remain,
/// either eps_bar >= 0 and any row may go, or eps_bar = -1 and a largest
/// tight column set S is used to protect NAE(m|^S) together with a recursive
/// certificate for the columns outside S; a row outside both is deleted.
/// Every deletion is re-verified. Throws DomainError (witness = violating
/// columns) if eps_bar(m) < -1 or n < k-1.
SubsetIndex nae_restrict(const Matrix& m);

/// Every (k-1)-row subset R with eps_bar(m|_R) = -1, ascending by bitmask.
std::vector<SubsetIndex> exhaustive_nae_restrict(const Matrix& m);

}  // namespace hadex
