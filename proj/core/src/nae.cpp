#include "hadex/nae.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "hadex/error.hpp"
#include "hadex/hadamard.hpp"

namespace hadex {

namespace {

// Per row, the color classes as column bitmasks. A row is constant on a
// nonempty column set C exactly when C lies inside one of its classes.
class ColorTable {
 public:
  explicit ColorTable(const Matrix& m) : n_(static_cast<unsigned>(m.rows())),
                                         k_(static_cast<unsigned>(m.cols())) {
    classes_.resize(n_);
    for (unsigned i = 0; i < n_; ++i) {
      std::uint64_t seen = 0;
      for (unsigned j = 0; j < k_; ++j) {
        if ((seen >> j) & 1U) continue;
        std::uint64_t cls = 0;
        for (unsigned jj = j; jj < k_; ++jj) {
          if (m(i, jj) == m(i, j)) cls |= std::uint64_t{1} << jj;
        }
        seen |= cls;
        classes_[i].push_back(cls);
      }
    }
  }

  unsigned rows() const { return n_; }
  unsigned cols() const { return k_; }

  std::uint64_t nae(std::uint64_t rows, std::uint64_t cols) const {
    std::uint64_t out = 0;
    for (std::uint64_t rest = rows; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<unsigned>(std::countr_zero(rest));
      bool constant = false;
      for (std::uint64_t cls : classes_[i]) {
        if ((cols & ~cls) == 0) {
          constant = true;
          break;
        }
      }
      if (!constant) out |= std::uint64_t{1} << i;
    }
    return out;
  }

  int eps(std::uint64_t rows, std::uint64_t cols) const {
    return std::popcount(nae(rows, cols)) - std::popcount(cols);
  }

  struct Minimum {
    int value;
    std::uint64_t cols;
  };

  // Minimum of eps over nonempty C ⊆ universe; ties go to the smallest mask.
  Minimum eps_bar(std::uint64_t rows, std::uint64_t universe) const {
    Minimum best{0, 0};
    bool first = true;
    // (s - u) & u steps through the submasks of u in increasing order.
    for (std::uint64_t s = (0 - universe) & universe; s != 0; s = (s - universe) & universe) {
      const int e = eps(rows, s);
      if (first || e < best.value) {
        best = {e, s};
        first = false;
      }
    }
    return best;
  }

  // Largest C ⊆ universe with eps = -1; ties go to the smallest mask.
  std::uint64_t largest_tight(std::uint64_t rows, std::uint64_t universe) const {
    std::uint64_t best = 0;
    for (std::uint64_t s = (0 - universe) & universe; s != 0; s = (s - universe) & universe) {
      if (eps(rows, s) == -1 && std::popcount(s) > std::popcount(best)) best = s;
    }
    return best;
  }

  // Pure in (rows, cols), so results are cached.
  std::uint64_t restrict(std::uint64_t rows, std::uint64_t cols) const;

 private:
  bool deletion_keeps_condition(std::uint64_t rows, unsigned t, std::uint64_t cols) const {
    return eps_bar(rows & ~(std::uint64_t{1} << t), cols).value >= -1;
  }

  // Highest-indexed candidate whose deletion keeps eps_bar >= -1.
  std::uint64_t delete_one(std::uint64_t rows, std::uint64_t candidates,
                           std::uint64_t cols) const {
    for (std::uint64_t rest = candidates; rest != 0;) {
      const auto t = static_cast<unsigned>(63 - std::countl_zero(rest));
      if (deletion_keeps_condition(rows, t, cols)) return rows & ~(std::uint64_t{1} << t);
      rest &= ~(std::uint64_t{1} << t);
    }
    throw std::logic_error(
        "nae_restrict: no deletable row keeps eps_bar >= -1; this contradicts the "
        "existence guarantee for restrictions and indicates an implementation defect");
  }

  unsigned n_;
  unsigned k_;
  std::vector<std::vector<std::uint64_t>> classes_;

  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& key) const {
      return std::hash<std::uint64_t>{}(key.first * 0x9E3779B97F4A7C15ULL ^ key.second);
    }
  };
  mutable std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t, KeyHash>
      restrict_cache_;
};

std::uint64_t ColorTable::restrict(std::uint64_t rows, std::uint64_t cols) const {
  const int target = std::popcount(cols) - 1;
  if (target <= 0) return 0;
  const auto key = std::make_pair(rows, cols);
  if (const auto hit = restrict_cache_.find(key); hit != restrict_cache_.end()) return hit->second;
  while (std::popcount(rows) > target) {
    if (eps_bar(rows, cols).value >= 0) {
      rows = delete_one(rows, rows, cols);
      continue;
    }
    const std::uint64_t tight = largest_tight(rows, cols);
    const std::uint64_t protected_rows = nae(rows, tight) | restrict(rows, cols & ~tight);
    rows = delete_one(rows, rows & ~protected_rows, cols);
  }
  restrict_cache_.emplace(key, rows);
  return rows;
}

std::string one_based_list(const SubsetIndex& s) {
  std::string out = "[";
  bool first = true;
  for (unsigned i : s) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "]";
}

void require_columns(const Matrix& m) {
  if (m.cols() == 0) throw DomainError("matrix has no columns");
  if (m.cols() > kMaxDeficiencyColumns) {
    throw GuardError("2^" + std::to_string(m.cols()) +
                     " column subsets exceed the guard k <= " +
                     std::to_string(kMaxDeficiencyColumns));
  }
  if (m.rows() > SubsetIndex::kMaxGround) {
    throw GuardError("too many rows: " + std::to_string(m.rows()));
  }
}

void require_nonempty(const Matrix& m, const SubsetIndex& cols) {
  if (cols.ground_size() != m.cols()) {
    throw DomainError("column subset ground size does not match the column count");
  }
  if (cols.is_empty()) throw DomainError("column set must be nonempty");
  if (m.rows() > SubsetIndex::kMaxGround) {
    throw GuardError("too many rows: " + std::to_string(m.rows()));
  }
}

}  // namespace

SubsetIndex nae_rows(const Matrix& m, const SubsetIndex& cols) {
  require_nonempty(m, cols);
  const ColorTable table(m);
  const auto n = static_cast<unsigned>(m.rows());
  return {n, table.nae(SubsetIndex::full(n).bits(), cols.bits())};
}

int eps(const Matrix& m, const SubsetIndex& cols) {
  return static_cast<int>(nae_rows(m, cols).size()) - static_cast<int>(cols.size());
}

NaeReport eps_bar(const Matrix& m) {
  require_columns(m);
  const ColorTable table(m);
  const auto n = static_cast<unsigned>(m.rows());
  const auto k = static_cast<unsigned>(m.cols());
  const auto all_rows = SubsetIndex::full(n).bits();
  const auto best = table.eps_bar(all_rows, SubsetIndex::full(k).bits());
  return {best.value, SubsetIndex(k, best.cols), SubsetIndex(n, table.nae(all_rows, best.cols))};
}

SubsetIndex nae_restrict(const Matrix& m) {
  const NaeReport report = eps_bar(m);
  if (!report.satisfied()) {
    throw DomainError("NAE condition violated: eps_bar = " + std::to_string(report.eps_bar),
                      one_based_list(report.witness_columns));
  }
  const auto n = static_cast<unsigned>(m.rows());
  const auto k = static_cast<unsigned>(m.cols());
  if (n + 1 < k) {
    throw DomainError("need at least k-1 = " + std::to_string(k - 1) + " rows, have " +
                      std::to_string(n));
  }
  const ColorTable table(m);
  const std::uint64_t rows = table.restrict(SubsetIndex::full(n).bits(),
                                            SubsetIndex::full(k).bits());
  if (std::popcount(rows) != static_cast<int>(k) - 1 ||
      table.eps_bar(rows, SubsetIndex::full(k).bits()).value != -1) {
    throw std::logic_error("nae_restrict produced a set that fails its postcondition");
  }
  return {n, rows};
}

std::vector<SubsetIndex> exhaustive_nae_restrict(const Matrix& m) {
  require_columns(m);
  const auto n = static_cast<unsigned>(m.rows());
  const auto k = static_cast<unsigned>(m.cols());
  if (binomial(n, k - 1) > kMaxSubsetScan) {
    throw GuardError("C(" + std::to_string(n) + ", " + std::to_string(k - 1) +
                     ") candidate subsets exceed the guard of " +
                     std::to_string(kMaxSubsetScan));
  }
  const ColorTable table(m);
  const auto all_cols = SubsetIndex::full(k).bits();
  std::vector<SubsetIndex> out;
  for (const auto& rows : subsets_of_size(n, k - 1)) {
    if (table.eps_bar(rows.bits(), all_cols).value == -1) out.push_back(rows);
  }
  return out;
}

}  // namespace hadex
