#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace hadex {

/// A subset of the ground set {0, ..., ground_size-1}, stored as a bitmask.
///
/// Indices are 0-based here; the JSON/CLI layer presents them 1-based.
/// Iteration visits members in increasing index order.
class SubsetIndex {
 public:
  static constexpr unsigned kMaxGround = 62;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;
    using pointer = const unsigned*;
    using reference = unsigned;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    unsigned operator*() const { return static_cast<unsigned>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(iterator a, iterator b) { return a.rest_ == b.rest_; }

   private:
    std::uint64_t rest_ = 0;
  };

  SubsetIndex() = default;
  /// Throws DomainError if ground_size exceeds kMaxGround or bits lie outside it.
  SubsetIndex(unsigned ground_size, std::uint64_t bits);

  static SubsetIndex empty(unsigned ground_size) { return {ground_size, 0}; }
  static SubsetIndex full(unsigned ground_size);
  static SubsetIndex of(unsigned ground_size, const std::vector<unsigned>& members);

  unsigned ground_size() const { return ground_; }
  std::uint64_t bits() const { return bits_; }
  unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(unsigned i) const { return i < ground_ && ((bits_ >> i) & 1U) != 0; }
  bool is_subset_of(const SubsetIndex& other) const { return (bits_ & ~other.bits_) == 0; }

  SubsetIndex with(unsigned i) const;
  SubsetIndex without(unsigned i) const;
  SubsetIndex complement() const;

  std::vector<unsigned> members() const { return {begin(), end()}; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend SubsetIndex operator|(const SubsetIndex& a, const SubsetIndex& b);
  friend SubsetIndex operator&(const SubsetIndex& a, const SubsetIndex& b);
  /// Set difference a \ b.
  friend SubsetIndex operator-(const SubsetIndex& a, const SubsetIndex& b);

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

 private:
  std::uint64_t bits_ = 0;
  unsigned ground_ = 0;
};

/// All subsets of a ground set of size n, ordered by cardinality and then by
/// bitmask value. The empty set comes first. n must be at most 20.
std::vector<SubsetIndex> subsets_by_cardinality(unsigned n);

/// All `size`-element subsets of {0..n-1} in ascending bitmask order.
std::vector<SubsetIndex> subsets_of_size(unsigned n, unsigned size);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(unsigned n, unsigned r);

}  // namespace hadex
