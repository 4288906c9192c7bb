#include "hadex/partition_algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hadex/error.hpp"

namespace hadex {

Partition blocks_of(std::span<const Rational> v) {
  if (v.empty()) throw DomainError("cannot partition an empty vector");
  const auto k = static_cast<unsigned>(v.size());
  if (k > SubsetIndex::kMaxGround) throw GuardError("vector too long to partition");

  Partition p;
  p.ambient = v.size();
  p.values.assign(v.begin(), v.end());
  std::sort(p.values.begin(), p.values.end(), std::greater<>());
  p.values.erase(std::unique(p.values.begin(), p.values.end()), p.values.end());
  for (const auto& lambda : p.values) {
    std::uint64_t bits = 0;
    for (unsigned j = 0; j < k; ++j) {
      if (v[j] == lambda) bits |= std::uint64_t{1} << j;
    }
    p.blocks.emplace_back(k, bits);
  }
  return p;
}

Matrix block_projection(const Partition& partition, std::size_t i) {
  if (i >= partition.size()) {
    throw DomainError("block index " + std::to_string(i + 1) + " out of range (partition has " +
                      std::to_string(partition.size()) + " blocks)");
  }
  Matrix p(partition.ambient, partition.ambient);
  for (unsigned j : partition.blocks[i]) p(j, j) = 1;
  return p;
}

Matrix lagrange_projection(std::span<const Rational> v, std::size_t i) {
  const Partition partition = blocks_of(v);
  const Matrix direct = block_projection(partition, i);

  const Matrix v_diag = Matrix::diagonal(v);
  const Matrix id = Matrix::identity(v.size());
  const Rational& lambda_i = partition.values[i];
  Matrix value = id;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    if (j == i) continue;
    const Rational& lambda_j = partition.values[j];
    const Matrix factor = (Rational(1) / (lambda_i - lambda_j)) * (v_diag - lambda_j * id);
    value = value * factor;
  }
  if (value != direct) {
    throw std::logic_error("Lagrange polynomial at diag(v) differs from the block projector");
  }
  return value;
}

ProjectionSet projections_of(std::span<const Rational> v) {
  ProjectionSet set{blocks_of(v), {}};
  for (std::size_t i = 0; i < set.partition.size(); ++i) {
    set.projections.push_back(lagrange_projection(v, i));
  }
  return set;
}

Subspace project(const Matrix& projection, const Subspace& u) {
  if (projection.rows() != u.ambient_dim() || projection.cols() != u.ambient_dim()) {
    throw DomainError("projection size does not match the ambient dimension");
  }
  return Subspace::row_space(u.basis() * projection);
}

bool respects(const Subspace& u, const Partition& partition) {
  if (u.ambient_dim() != partition.ambient) {
    throw DomainError("subspace lives in dimension " + std::to_string(u.ambient_dim()) +
                      " but the partition covers " + std::to_string(partition.ambient));
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    total += project(block_projection(partition, i), u).dim();
  }
  return total == u.dim();
}

Subspace bar_odot(std::span<const Rational> v, const Subspace& u) {
  if (v.size() != u.ambient_dim()) {
    throw DomainError("vector length " + std::to_string(v.size()) +
                      " does not match ambient dimension " + std::to_string(u.ambient_dim()));
  }
  std::vector<Vector> images;
  images.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    images.push_back(hadamard_product(u.basis().row(i), v));
  }
  return u.extended(images);
}

bool is_invariant(std::span<const Rational> v, const Subspace& u) { return bar_odot(v, u) == u; }

}  // namespace hadex
