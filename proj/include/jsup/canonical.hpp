#pragma once

// The extremal functions f^{i,w,n}: built from i disjoint coordinate pairs
// (m_k, m'_k), equal to (-1)^{|supp(x) & M|} on vertices that hold exactly one
// coordinate of every pair, and zero elsewhere.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jsup/johnson.hpp"

namespace jsup {

struct PairingConfig {
  // (m_k, m'_k); the first coordinate of each pair belongs to M.
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  // Throws invalid_argument unless all 2i coordinates are distinct and < n.
  void validate(int n) const;
  std::string to_string() const;  // "a:b,c:d"

  friend bool operator==(const PairingConfig&, const PairingConfig&) = default;
};

/// (0,1), (2,3), ... with i pairs.
PairingConfig default_pairing(int i);

/// Parses "a:b,c:d,..."; empty text gives the empty pairing.
PairingConfig parse_pairing(const std::string& text);

/// 2^i C(n-2i, w-i); zero when n < 2i.
BigInteger support_size_bound(int n, int w, int i);

/// Throws invalid_argument when i > w, when w - i > n - 2i or when the pairing
/// does not have exactly i valid pairs.
SparseFunction build_canonical(const JohnsonParams& params, int i, const PairingConfig& pairing);

struct CanonicalMatch {
  PairingConfig pairing;
  BigRational scalar;
};

/// Finds (pairing, c) with f = c * build_canonical(params, i, pairing).
/// The pairing is normalized: pairs ordered by their smaller coordinate, each
/// listed smaller-first except that the first pair is oriented so that c > 0.
std::optional<CanonicalMatch> match_canonical(const SparseFunction& f, int i);

}  // namespace jsup
