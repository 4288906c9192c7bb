#include "families.hpp"

#include <algorithm>
#include <string>

#include "hadex/error.hpp"

namespace hadex::cli {

Matrix vandermonde_family(const Vector& row, std::size_t copies) {
  if (row.empty()) throw DomainError("vandermonde: the row must be nonempty");
  Vector sorted = row;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("vandermonde: row entries must be pairwise distinct");
  }
  Matrix m(0, row.size());
  for (std::size_t c = 0; c < copies; ++c) m.append_row(row);
  return m;
}

Matrix hamming_family(unsigned l) {
  if (l < 1 || l > 10) throw DomainError("hamming: need 1 <= l <= 10, got " + std::to_string(l));
  const std::size_t k = std::size_t{1} << l;
  Matrix m(l, k);
  for (unsigned i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = ((j >> i) & 1U) != 0 ? -1 : 1;
  }
  return m;
}

Matrix stairstep_family(std::size_t k) {
  if (k < 1) throw DomainError("stairstep: need k >= 1");
  Matrix m(k - 1, k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = i < j ? Rational(1) : Rational(1, 2);
  }
  return m;
}

}  // namespace hadex::cli
