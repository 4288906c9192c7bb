#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hadex/matrix.hpp"

namespace hadex {

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const Matrix& a);

/// Reduced row echelon form with zero rows dropped, plus the pivot column of
/// each remaining row.
///
/// Elimination runs fraction-free on row-wise integer scalings and only the
/// final normalization divides by the pivot. Pivots are taken as the first
/// nonzero entry scanning columns left to right, rows top to bottom.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;
};
Echelon reduced_row_echelon(const Matrix& a);

/// Solves the square system a x = b exactly. Returns nullopt if a is singular.
std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b);

/// A linear subspace of Q^k held by its canonical RREF basis.
///
/// Because the RREF of a spanning set is unique, two Subspaces compare equal
/// exactly when they are equal as sets.
class Subspace {
 public:
  /// The zero subspace of Q^k.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace row_space(const Matrix& a);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// span(this ∪ vectors).
  Subspace extended(const std::vector<Vector>& vectors) const;

  /// {w : <w, u> = 0 for all u in this}, so dim = ambient - dim(this).
  Subspace orthogonal_complement() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient_dim, Echelon echelon);

  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hadex
