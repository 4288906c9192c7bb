#include "hadex/subset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "hadex/error.hpp"

namespace hadex {

namespace {

std::uint64_t ground_mask(unsigned ground_size) {
  return ground_size == 0 ? 0 : (~std::uint64_t{0} >> (64 - ground_size));
}

}  // namespace

SubsetIndex::SubsetIndex(unsigned ground_size, std::uint64_t bits)
    : bits_(bits), ground_(ground_size) {
  if (ground_size > kMaxGround) {
    throw GuardError("ground set of size " + std::to_string(ground_size) +
                     " exceeds the cap of " + std::to_string(kMaxGround));
  }
  if ((bits & ~ground_mask(ground_size)) != 0) {
    throw DomainError("subset has members outside its ground set of size " +
                      std::to_string(ground_size));
  }
}

SubsetIndex SubsetIndex::full(unsigned ground_size) {
  if (ground_size > kMaxGround) return {ground_size, 0};  // throws
  return {ground_size, ground_mask(ground_size)};
}

SubsetIndex SubsetIndex::of(unsigned ground_size, const std::vector<unsigned>& members) {
  std::uint64_t bits = 0;
  for (unsigned i : members) {
    if (i >= ground_size) {
      throw DomainError("index " + std::to_string(i) + " outside ground set of size " +
                        std::to_string(ground_size));
    }
    bits |= std::uint64_t{1} << i;
  }
  return {ground_size, bits};
}

SubsetIndex SubsetIndex::with(unsigned i) const {
  if (i >= ground_) throw DomainError("index " + std::to_string(i) + " out of range");
  return {ground_, bits_ | (std::uint64_t{1} << i)};
}

SubsetIndex SubsetIndex::without(unsigned i) const {
  if (i >= ground_) throw DomainError("index " + std::to_string(i) + " out of range");
  return {ground_, bits_ & ~(std::uint64_t{1} << i)};
}

SubsetIndex SubsetIndex::complement() const {
  return {ground_, ~bits_ & ground_mask(ground_)};
}

SubsetIndex operator|(const SubsetIndex& a, const SubsetIndex& b) {
  return {std::max(a.ground_, b.ground_), a.bits_ | b.bits_};
}

SubsetIndex operator&(const SubsetIndex& a, const SubsetIndex& b) {
  return {std::max(a.ground_, b.ground_), a.bits_ & b.bits_};
}

SubsetIndex operator-(const SubsetIndex& a, const SubsetIndex& b) {
  return {a.ground_, a.bits_ & ~b.bits_};
}

std::vector<SubsetIndex> subsets_by_cardinality(unsigned n) {
  if (n > 20) {
    throw GuardError("refusing to enumerate 2^" + std::to_string(n) +
                     " subsets (guard: n <= 20)");
  }
  std::vector<SubsetIndex> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned size = 0; size <= n; ++size) {
    auto layer = subsets_of_size(n, size);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<SubsetIndex> subsets_of_size(unsigned n, unsigned size) {
  std::vector<SubsetIndex> out;
  if (size > n) return out;
  if (size == 0) return {SubsetIndex::empty(n)};
  // Gosper's hack walks same-popcount masks in increasing order.
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  while (mask < limit) {
    out.emplace_back(n, mask);
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return out;
}

std::uint64_t binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i is exact; split off gcd(acc, i) first so the
    // multiplication only overflows when the result does.
    const std::uint64_t g = std::gcd(acc, std::uint64_t{i});
    const std::uint64_t factor = (n - r + i) / (i / g);
    if (__builtin_mul_overflow(acc / g, factor, &acc)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return acc;
}

}  // namespace hadex
