#include "jsup/combinatorics.hpp"

#include <array>
#include <string>

#include "jsup/error.hpp"

namespace jsup {

namespace {

using PascalRow = std::array<std::uint64_t, kMaxCoordinates + 1>;

const std::array<PascalRow, kMaxCoordinates + 1>& pascal_table() {
  static const auto table = [] {
    std::array<PascalRow, kMaxCoordinates + 1> t{};
    for (int n = 0; n <= kMaxCoordinates; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

VertexSet VertexSet::from_bits(std::uint64_t bits, int n) {
  if (n < 0 || n > kMaxCoordinates) {
    throw Error(ErrorCode::invalid_argument, "n must lie in [0, 64], got " + std::to_string(n));
  }
  if (n < 64 && (bits >> n) != 0) {
    throw Error(ErrorCode::invalid_argument, "vertex has a coordinate >= n");
  }
  return {bits, n};
}

VertexSet VertexSet::from_elements(std::span<const int> elements, int n) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= n || e >= kMaxCoordinates) {
      throw Error(ErrorCode::invalid_argument, "coordinate " + std::to_string(e) + " outside [0, n)");
    }
    const std::uint64_t bit = std::uint64_t{1} << e;
    if (bits & bit) throw Error(ErrorCode::invalid_argument, "repeated coordinate " + std::to_string(e));
    bits |= bit;
  }
  return from_bits(bits, n);
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(weight());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

BigInteger binomial(long n, long k) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || n > kMaxCoordinates || k < 0 || k > n) return 0;
  return pascal_table()[n][k];
}

std::uint64_t rank_subset(VertexSet s) {
  std::uint64_t r = 0;
  int k = 1;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1, ++k) {
    r += binomial_u64(std::countr_zero(b), k);
  }
  return r;
}

VertexSet unrank_subset(std::uint64_t r, int n, int w) {
  if (w < 0 || w > n || n > kMaxCoordinates) {
    throw Error(ErrorCode::invalid_argument, "invalid parameters for unrank");
  }
  if (r >= binomial_u64(n, w)) {
    throw Error(ErrorCode::out_of_range,
                "rank " + std::to_string(r) + " outside [0, C(" + std::to_string(n) + "," + std::to_string(w) + "))");
  }
  std::uint64_t bits = 0;
  int c = n;
  for (int k = w; k >= 1; --k) {
    // Largest c with C(c, k) <= r.
    do { --c; } while (binomial_u64(c, k) > r);
    r -= binomial_u64(c, k);
    bits |= std::uint64_t{1} << c;
  }
  return VertexSet::from_bits(bits, n);
}

}  // namespace jsup
