#pragma once

// Exact binomials and the co-lexicographic ranking of w-subsets that fixes
// the vertex order used throughout the library and by the function file format.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "jsup/numeric.hpp"

namespace jsup {

inline constexpr int kMaxCoordinates = 64;

/// A subset of {0, ..., n-1}, i.e. a binary vector of length n. Bit j set
/// means coordinate j is one.
class VertexSet {
 public:
  VertexSet() = default;

  static VertexSet from_bits(std::uint64_t bits, int n);
  static VertexSet from_elements(std::span<const int> elements, int n);
  static VertexSet from_elements(std::initializer_list<int> elements, int n) {
    return from_elements(std::span<const int>(elements.begin(), elements.size()), n);
  }

  std::uint64_t bits() const noexcept { return bits_; }
  int n() const noexcept { return n_; }
  int weight() const noexcept { return std::popcount(bits_); }
  bool contains(int j) const noexcept { return (bits_ >> j) & 1u; }

  VertexSet with(int j) const noexcept { return {bits_ | (std::uint64_t{1} << j), n_}; }
  VertexSet without(int j) const noexcept { return {bits_ & ~(std::uint64_t{1} << j), n_}; }

  // Sorted ascending.
  std::vector<int> elements() const;

  // For equal n and equal weight, numeric order of the bit pattern is co-lex order.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  VertexSet(std::uint64_t bits, int n) : bits_(bits), n_(n) {}

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInteger binomial(long n, long k);

/// Machine-word binomial for n <= 64 (C(64,32) fits in 64 bits).
std::uint64_t binomial_u64(int n, int k);

/// Co-lex combinadic rank: sum over k of C(c_k, k) for sorted elements c_1 < ... < c_w.
std::uint64_t rank_subset(VertexSet s);

/// Inverse of rank_subset. Throws out_of_range when r >= C(n, w).
VertexSet unrank_subset(std::uint64_t r, int n, int w);

/// Visits every w-subset of {0..n-1} in co-lex (= rank) order.
template <typename Fn>
void for_each_subset(int n, int w, Fn&& fn) {
  if (w < 0 || w > n) return;
  if (w == 0) {
    fn(VertexSet::from_bits(0, n));
    return;
  }
  const std::uint64_t limit = (n == 64) ? 0 : (std::uint64_t{1} << n);
  std::uint64_t v = (w == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << w) - 1);
  for (;;) {
    fn(VertexSet::from_bits(v, n));
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    if (r == 0) return;  // wrapped past bit 63
    v = (((r ^ v) >> 2) / c) | r;
    if (limit != 0 && v >= limit) return;
  }
}

}  // namespace jsup
