#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hadex/matrix.hpp"
#include "hadex/subset.hpp"
#include "hadex/subspace.hpp"

namespace hadex {

/// The partition B(v) of coordinates by equal value.
///
/// values[i] is the i-th distinct value in strictly decreasing order and
/// blocks[i] = { j : v_j = values[i] }.
struct Partition {
  std::size_t ambient = 0;
  std::vector<Rational> values;
  std::vector<SubsetIndex> blocks;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// The projections P_(i) of a partition. They are 0/1 diagonal, sum to the
/// identity and satisfy P_(i) P_(j) = δ_ij P_(i).
struct ProjectionSet {
  Partition partition;
  std::vector<Matrix> projections;
};

Partition blocks_of(std::span<const Rational> v);

/// The 0/1 diagonal matrix with ones on blocks[i].
Matrix block_projection(const Partition& partition, std::size_t i);

/// p_{v,i}(diag(v)), where p_{v,i} is the Lagrange basis polynomial equal to 1
/// at the i-th distinct value and 0 at the others.
///
/// The polynomial is evaluated as a product of matrices and then compared
/// with block_projection; a mismatch throws std::logic_error.
Matrix lagrange_projection(std::span<const Rational> v, std::size_t i);

ProjectionSet projections_of(std::span<const Rational> v);

/// Image of u under the diagonal map `projection` (row vectors times P).
Subspace project(const Matrix& projection, const Subspace& u);

/// True iff u is the direct sum of its block projections, i.e.
/// dim u = Σ_i dim P_(i) u.
bool respects(const Subspace& u, const Partition& partition);

/// span(u ∪ v ⊙ u).
Subspace bar_odot(std::span<const Rational> v, const Subspace& u);

/// True iff bar_odot(v, u) = u.
bool is_invariant(std::span<const Rational> v, const Subspace& u);

}  // namespace hadex
