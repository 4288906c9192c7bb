#include "hadex/mixture.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hadex/error.hpp"
#include "hadex/hadamard.hpp"
#include "hadex/subspace.hpp"

namespace hadex {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

void require_moment_guard(std::size_t n) {
  if (n > kMaxExtensionRows) {
    throw GuardError("2^" + std::to_string(n) + " moments exceed the guard n <= " +
                     std::to_string(kMaxExtensionRows));
  }
}

}  // namespace

MixtureParams::MixtureParams(Matrix m, Vector pi) : m_(std::move(m)), pi_(std::move(pi)) {
  if (pi_.size() != m_.cols()) {
    throw DomainError("pi has " + std::to_string(pi_.size()) + " entries but m has " +
                      std::to_string(m_.cols()) + " columns");
  }
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (m_(i, j) < Rational(0) || m_(i, j) > Rational(1)) {
        throw DomainError("m entry " + m_(i, j).to_string() + " is not a probability",
                          cell(i, j));
      }
    }
  }
  Rational total;
  for (std::size_t j = 0; j < pi_.size(); ++j) {
    if (pi_[j].sign() < 0) {
      throw DomainError("pi entry " + pi_[j].to_string() + " is negative",
                        std::to_string(j + 1));
    }
    total += pi_[j];
  }
  if (total != Rational(1)) {
    throw DomainError("pi sums to " + total.to_string() + ", not 1");
  }
}

MomentVector::MomentVector(unsigned n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  require_moment_guard(n);
  if (values_.size() != (std::size_t{1} << n)) {
    throw DomainError("moment vector over n = " + std::to_string(n) + " needs " +
                      std::to_string(std::size_t{1} << n) + " entries, got " +
                      std::to_string(values_.size()));
  }
  if (values_[0] != Rational(1)) {
    throw DomainError("moment of the empty set must be 1, got " + values_[0].to_string());
  }
}

bool MomentVector::is_well_formed() const {
  if (values_[0] != Rational(1)) return false;
  for (std::size_t s = 0; s < values_.size(); ++s) {
    if (values_[s] < Rational(0) || values_[s] > Rational(1)) return false;
    // Checking single-element supersets suffices for monotonicity.
    for (unsigned i = 0; i < n_; ++i) {
      const std::size_t t = s | (std::size_t{1} << i);
      if (values_[t] > values_[s]) return false;
    }
  }
  return true;
}

MomentVector moment_map(const MixtureParams& params) {
  const Matrix& m = params.m();
  require_moment_guard(m.rows());
  const auto n = static_cast<unsigned>(m.rows());
  const auto products = hadamard_rows_by_mask(m);
  std::vector<Rational> values;
  values.reserve(products.size());
  for (const auto& row : products) values.push_back(dot(row, params.pi()));
  return {n, std::move(values)};
}

bool is_separated(const Matrix& m, std::size_t i) {
  if (i >= m.rows()) throw DomainError("row index " + std::to_string(i + 1) + " out of range");
  Vector row = m.row_vector(i);
  std::sort(row.begin(), row.end());
  return std::adjacent_find(row.begin(), row.end()) == row.end();
}

IdentifiabilityReport identifiability_gate(const Matrix& m) {
  if (m.rows() > kMaxExtensionRows) {
    throw GuardError("identifiability gate limited to n <= " + std::to_string(kMaxExtensionRows));
  }
  IdentifiabilityReport report;
  report.k = m.cols();
  const GreedyResult greedy = greedy_min_rows(m);
  if (const auto* rows = std::get_if<SubsetIndex>(&greedy)) {
    report.rank = m.cols();
    report.full_rank = true;
    report.certificate = *rows;
  } else {
    report.rank = std::get<NotFullRank>(greedy).rank;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (is_separated(m, i)) ++report.separated_rows;
  }
  return report;
}

Vector recover_pi(const Matrix& m, const MomentVector& moments) {
  if (moments.n() != m.rows()) {
    throw DomainError("moments cover n = " + std::to_string(moments.n()) + " observables but m has " +
                      std::to_string(m.rows()) + " rows");
  }
  const std::size_t k = m.cols();
  const GreedyResult greedy = greedy_min_rows(m);
  const auto* certificate = std::get_if<SubsetIndex>(&greedy);
  if (certificate == nullptr) {
    throw DomainError("H(m) has rank " + std::to_string(std::get<NotFullRank>(greedy).rank) +
                      " < k = " + std::to_string(k) + "; pi is not identifiable");
  }

  // Canonical order on subsets of R maps to canonical order on [n] because
  // the local-to-global index map is increasing.
  const std::vector<unsigned> members = certificate->members();
  const auto n = static_cast<unsigned>(m.rows());
  Matrix system(0, k);
  Vector rhs;
  Subspace chosen(k);
  for (const auto& local : subsets_by_cardinality(certificate->size())) {
    if (system.rows() == k) break;
    SubsetIndex global = SubsetIndex::empty(n);
    for (unsigned l : local) global = global.with(members[l]);
    HadamardRow row = hadamard_row(m, global);
    Subspace grown = chosen.extended({row.values});
    if (grown.dim() == chosen.dim()) continue;
    chosen = std::move(grown);
    system.append_row(row.values);
    rhs.push_back(moments.at(global));
  }

  auto pi = solve(system, rhs);
  if (!pi) throw std::logic_error("selected extension rows are singular");

  Rational total;
  for (const auto& x : *pi) total += x;
  if (total != Rational(1)) {
    throw DomainError("inconsistent moments: recovered pi sums to " + total.to_string());
  }
  const auto products = hadamard_rows_by_mask(m);
  for (std::size_t s = 0; s < products.size(); ++s) {
    if (dot(products[s], *pi) != moments.values()[s]) {
      throw DomainError("inconsistent moments: equation for subset mask " + std::to_string(s) +
                            " fails",
                        std::to_string(s));
    }
  }
  return *pi;
}

}  // namespace hadex
