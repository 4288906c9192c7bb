#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hadex/matrix.hpp"
#include "hadex/subset.hpp"

namespace hadex {

/// Parameters of a mixture of n binary product distributions with k
/// hidden classes: m(i, j) = Pr(X_i = 1 | H = j) and pi(j) = Pr(H = j).
///
/// Construction validates 0 <= m(i, j) <= 1, pi >= 0 and Σ pi = 1.
class MixtureParams {
 public:
  MixtureParams(Matrix m, Vector pi);

  const Matrix& m() const { return m_; }
  const Vector& pi() const { return pi_; }

 private:
  Matrix m_;
  Vector pi_;
};

/// μ_S = Pr(∏_{i∈S} X_i = 1) for every S ⊆ [n], indexed by bitmask.
class MomentVector {
 public:
  /// values[mask] is the moment of the subset with that bitmask. Requires
  /// values.size() == 2^n and values[0] == 1.
  MomentVector(unsigned n, std::vector<Rational> values);

  unsigned n() const { return n_; }
  const Rational& at(const SubsetIndex& s) const { return values_.at(s.bits()); }
  const std::vector<Rational>& values() const { return values_; }

  /// μ_∅ = 1, all values in [0, 1], and μ_T <= μ_S whenever S ⊆ T.
  bool is_well_formed() const;

  friend bool operator==(const MomentVector&, const MomentVector&) = default;

 private:
  unsigned n_;
  std::vector<Rational> values_;
};

/// μ(m, π)_S = m_S · π over all S. Throws GuardError for n > 20.
MomentVector moment_map(const MixtureParams& params);

/// Row i has k pairwise distinct entries.
bool is_separated(const Matrix& m, std::size_t i);

struct IdentifiabilityReport {
  std::size_t k = 0;
  std::size_t rank = 0;
  bool full_rank = false;
  /// Rows R from greedy_min_rows with H(m|_R) of full rank, when full_rank.
  std::optional<SubsetIndex> certificate;
  std::size_t separated_rows = 0;
};

/// Full column rank of H(m) is necessary for μ(·, π) to be injective when
/// all π_j > 0. The separated-row count is reported for reference only.
IdentifiabilityReport identifiability_gate(const Matrix& m);

/// The unique π with m_S · π = μ_S for every S.
///
/// Builds a k x k system from the first k independent rows of H(m|_R) in
/// (cardinality, bitmask) order, R the greedy certificate, solves it and then
/// checks all 2^n moment equations. Throws DomainError if H(m) is not of
/// full column rank or the moments are inconsistent.
Vector recover_pi(const Matrix& m, const MomentVector& moments);

}  // namespace hadex
