#include "hadex/hadamard.hpp"

#include <string>

#include "hadex/error.hpp"

namespace hadex {

namespace {

unsigned row_count(const Matrix& m) {
  if (m.rows() > SubsetIndex::kMaxGround) {
    throw GuardError("matrix has " + std::to_string(m.rows()) + " rows; at most " +
                     std::to_string(SubsetIndex::kMaxGround) + " are supported");
  }
  return static_cast<unsigned>(m.rows());
}

void require_extension_guard(const Matrix& m) {
  if (m.rows() > kMaxExtensionRows) {
    throw GuardError("Hadamard extension of " + std::to_string(m.rows()) +
                     " rows exceeds the guard n <= " + std::to_string(kMaxExtensionRows));
  }
}

}  // namespace

HadamardRow hadamard_row(const Matrix& m, const SubsetIndex& subset) {
  if (subset.ground_size() != m.rows()) {
    throw DomainError("subset ground size does not match the row count");
  }
  Vector values = ones(m.cols());
  for (unsigned i : subset) values = hadamard_product(values, m.row(i));
  return {subset, std::move(values)};
}

std::vector<Vector> hadamard_rows_by_mask(const Matrix& m) {
  require_extension_guard(m);
  std::vector<Vector> by_mask(std::size_t{1} << m.rows());
  by_mask[0] = ones(m.cols());
  // m_S = m_{S - top} ⊙ m_top, and S - top < S as a bitmask.
  for (std::size_t s = 1; s < by_mask.size(); ++s) {
    const auto top = static_cast<unsigned>(63 - std::countl_zero(std::uint64_t{s}));
    by_mask[s] = hadamard_product(by_mask[s & ~(std::size_t{1} << top)], m.row(top));
  }
  return by_mask;
}

Matrix hadamard_extension(const Matrix& m) {
  const auto by_mask = hadamard_rows_by_mask(m);
  Matrix out(0, m.cols());
  for (const auto& s : subsets_by_cardinality(row_count(m))) out.append_row(by_mask[s.bits()]);
  return out;
}

RowspaceState RowspaceState::initial(const Matrix& m) {
  return {SubsetIndex::empty(row_count(m)), Subspace::span({ones(m.cols())}, m.cols())};
}

RowspaceState extend_rowspace(const RowspaceState& state, const Matrix& m, unsigned t) {
  if (t >= m.rows()) {
    throw DomainError("row index " + std::to_string(t + 1) + " out of range");
  }
  if (state.chosen_rows.contains(t)) {
    throw DomainError("row " + std::to_string(t + 1) + " is already chosen");
  }
  std::vector<Vector> images;
  images.reserve(state.space.dim());
  for (std::size_t i = 0; i < state.space.dim(); ++i) {
    images.push_back(hadamard_product(state.space.basis().row(i), m.row(t)));
  }
  return {state.chosen_rows.with(t), state.space.extended(images)};
}

std::size_t full_extension_rank(const Matrix& m) {
  require_extension_guard(m);
  RowspaceState state = RowspaceState::initial(m);
  for (unsigned t = 0; t < m.rows(); ++t) {
    if (state.space.dim() == m.cols()) break;
    state = extend_rowspace(state, m, t);
  }
  return state.space.dim();
}

std::size_t materialized_extension_rank(const Matrix& m) {
  return matrix_rank(hadamard_extension(m));
}

GreedyResult greedy_min_rows(const Matrix& m) {
  const unsigned n = row_count(m);
  RowspaceState state = RowspaceState::initial(m);
  while (state.space.dim() < m.cols()) {
    bool grew = false;
    for (unsigned t = 0; t < n; ++t) {
      if (state.chosen_rows.contains(t)) continue;
      RowspaceState next = extend_rowspace(state, m, t);
      if (next.space.dim() > state.space.dim()) {
        state = std::move(next);
        grew = true;
        break;
      }
    }
    if (!grew) return NotFullRank{state.space.dim()};
  }
  return state.chosen_rows;
}

std::vector<SubsetIndex> exhaustive_min_rows(const Matrix& m, unsigned size) {
  const unsigned n = row_count(m);
  if (size > n) {
    throw DomainError("subset size " + std::to_string(size) + " exceeds the row count " +
                      std::to_string(n));
  }
  if (binomial(n, size) > kMaxSubsetScan) {
    throw GuardError("C(" + std::to_string(n) + ", " + std::to_string(size) +
                     ") candidate subsets exceed the guard of " +
                     std::to_string(kMaxSubsetScan));
  }
  std::vector<SubsetIndex> out;
  for (const auto& rows : subsets_of_size(n, size)) {
    RowspaceState state = RowspaceState::initial(m);
    for (unsigned t : rows) {
      if (state.space.dim() == m.cols()) break;
      state = extend_rowspace(state, m, t);
    }
    if (state.space.dim() == m.cols()) out.push_back(rows);
  }
  return out;
}

}  // namespace hadex
