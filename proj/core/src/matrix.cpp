#include "hadex/matrix.hpp"

#include <string>

#include "hadex/error.hpp"

namespace hadex {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(std::string("shape mismatch in matrix ") + op);
  }
}

void require_ground(const SubsetIndex& s, std::size_t expected, const char* what) {
  if (s.ground_size() != expected) {
    throw DomainError(std::string(what) + " subset has ground size " +
                      std::to_string(s.ground_size()) + ", expected " +
                      std::to_string(expected));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

Vector Matrix::column(std::size_t j) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::restrict_rows(const SubsetIndex& rows) const {
  require_ground(rows, rows_, "row");
  Matrix out(0, cols_);
  for (unsigned i : rows) out.append_row(row(i));
  return out;
}

Matrix Matrix::restrict_cols(const SubsetIndex& cols) const {
  require_ground(cols, cols_, "column");
  Matrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t jj = 0;
    for (unsigned j : cols) out(i, jj++) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::restrict(const SubsetIndex& rows, const SubsetIndex& cols) const {
  return restrict_rows(rows).restrict_cols(cols);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw DomainError("row of length " + std::to_string(values.size()) +
                      " in a matrix with " + std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("shape mismatch in matrix product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sum");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "difference");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

Vector hadamard_product(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) {
    throw DomainError("Hadamard product of vectors of length " + std::to_string(u.size()) +
                      " and " + std::to_string(v.size()));
  }
  Vector out;
  out.reserve(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out.push_back(u[j] * v[j]);
  return out;
}

Vector ones(std::size_t k) { return Vector(k, Rational(1)); }

Rational dot(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) throw DomainError("dot product length mismatch");
  Rational acc;
  for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * v[j];
  return acc;
}

}  // namespace hadex
