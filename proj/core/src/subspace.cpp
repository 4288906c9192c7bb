#include "hadex/subspace.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "hadex/error.hpp"

namespace hadex {

namespace {

using IntRow = std::vector<mpz_class>;

// Scales each row by the lcm of its denominators so every entry is integral.
std::vector<IntRow> integer_rows(const Matrix& a) {
  std::vector<IntRow> out(a.rows(), IntRow(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class scale = 1;
    for (const auto& x : a.row(i)) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const mpq_class& x = a(i, j).raw();
      out[i][j] = x.get_num() * (scale / x.get_den());
    }
  }
  return out;
}

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::optional<std::size_t> find_pivot_row(const std::vector<IntRow>& m, std::size_t from,
                                          std::size_t col) {
  for (std::size_t p = from; p < m.size(); ++p) {
    if (sgn(m[p][col]) != 0) return p;
  }
  return std::nullopt;
}

}  // namespace

std::size_t matrix_rank(const Matrix& a) {
  auto m = integer_rows(a);
  const std::size_t n_rows = a.rows();
  const std::size_t n_cols = a.cols();
  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
    const auto pivot = find_pivot_row(m, rank, col);
    if (!pivot) continue;
    std::swap(m[*pivot], m[rank]);
    const mpz_class& lead = m[rank][col];
    for (std::size_t i = rank + 1; i < n_rows; ++i) {
      const mpz_class below = m[i][col];
      for (std::size_t j = col + 1; j < n_cols; ++j) {
        mpz_class t = lead * m[i][j] - below * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = lead;
    ++rank;
  }
  return rank;
}

Echelon reduced_row_echelon(const Matrix& a) {
  auto m = integer_rows(a);
  const std::size_t n_rows = a.rows();
  const std::size_t n_cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n_cols && r < n_rows; ++col) {
    const auto pivot = find_pivot_row(m, r, col);
    if (!pivot) continue;
    std::swap(m[*pivot], m[r]);
    make_primitive(m[r]);
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      const mpz_class lead = m[r][col];
      const mpz_class factor = m[i][col];
      for (std::size_t j = 0; j < n_cols; ++j) {
        m[i][j] = lead * m[i][j] - factor * m[r][j];
      }
      make_primitive(m[i]);
    }
    pivots.push_back(col);
    ++r;
  }

  Matrix basis(r, n_cols);
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& lead = m[i][pivots[i]];
    for (std::size_t j = 0; j < n_cols; ++j) basis(i, j) = Rational(m[i][j], lead);
  }
  return {std::move(basis), std::move(pivots)};
}

std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw DomainError("solve needs a square system with a matching right-hand side");
  }
  Matrix augmented(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n) = b[i];
  }
  const Echelon e = reduced_row_echelon(augmented);
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1)) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.basis(i, n);
  return x;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, Echelon echelon)
    : ambient_(ambient_dim),
      basis_(std::move(echelon.basis)),
      pivots_(std::move(echelon.pivots)) {}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& a) {
  return Subspace(a.cols(), reduced_row_echelon(a));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(Matrix::identity(ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DomainError("vector length does not match ambient dimension");
  Vector rest(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational c = rest[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= c * basis_(i, j);
  }
  for (const auto& x : rest) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DomainError("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::extended(const std::vector<Vector>& vectors) const {
  Matrix stacked = basis_;
  for (const auto& v : vectors) stacked.append_row(v);
  return row_space(stacked);
}

Subspace Subspace::orthogonal_complement() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < ambient_; ++free) {
    if (is_pivot[free]) continue;
    Vector x(ambient_);
    x[free] = 1;
    for (std::size_t i = 0; i < dim(); ++i) x[pivots_[i]] = -basis_(i, free);
    kernel.push_back(std::move(x));
  }
  return span(kernel, ambient_);
}

}  // namespace hadex
