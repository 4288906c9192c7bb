#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hadex/rational.hpp"
#include "hadex/subset.hpp"

namespace hadex {

/// Dense row-major matrix of Rationals.
///
/// A matrix may have zero rows (n = 0) while still carrying a column count,
/// which is how the empty matrix m with k columns is represented.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws DomainError if any row has a length different from `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(std::size_t k);
  static Matrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  /// Rows selected by `rows` (ground set must be rows()), order preserved.
  Matrix restrict_rows(const SubsetIndex& rows) const;
  /// Columns selected by `cols` (ground set must be cols()), order preserved.
  Matrix restrict_cols(const SubsetIndex& cols) const;
  Matrix restrict(const SubsetIndex& rows, const SubsetIndex& cols) const;

  Matrix transpose() const;
  void append_row(std::span<const Rational> values);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Entrywise product (u_1 v_1, ..., u_k v_k).
Vector hadamard_product(std::span<const Rational> u, std::span<const Rational> v);

Vector ones(std::size_t k);

Rational dot(std::span<const Rational> u, std::span<const Rational> v);

}  // namespace hadex
