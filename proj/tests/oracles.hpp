#pragma once
// Reference implementations used only by the tests. Each one recomputes a
// quantity from its definition without going through the library code path
// it is checked against.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "jsup/johnson.hpp"

namespace oracle {

using Mask = std::uint64_t;
using Dense = std::map<Mask, mpq_class>;  // vertex bits -> value, zeros omitted

inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> t(n + 1);
  for (int r = 0; r <= n; ++r) {
    t[r].assign(r + 1, 1);
    for (int c = 1; c < r; ++c) t[r][c] = t[r - 1][c - 1] + t[r - 1][c];
  }
  return t[n][k];
}

// Co-lex list built recursively: subsets avoiding n-1 first, then those containing it.
inline std::vector<Mask> colex_subsets(int n, int w) {
  if (w == 0) return {0};
  if (w > n) return {};
  auto out = colex_subsets(n - 1, w);
  for (Mask m : colex_subsets(n - 1, w - 1)) out.push_back(m | (Mask{1} << (n - 1)));
  return out;
}

inline Dense to_dense(const jsup::SparseFunction& f) {
  Dense d;
  for (const auto& [x, v] : f) d[x.bits()] = v;
  return d;
}

inline mpq_class at(const Dense& f, Mask x) {
  auto it = f.find(x);
  return it == f.end() ? mpq_class(0) : it->second;
}

// Equation check at every vertex of J(n,w), neighbours found by intersection size.
inline bool dense_eigen(const Dense& f, int n, int w, long lambda) {
  const auto verts = colex_subsets(n, w);
  for (Mask x : verts) {
    mpq_class sum = 0;
    for (Mask y : verts) {
      if (std::popcount(x & y) == w - 1) sum += at(f, y);
    }
    if (sum != lambda * at(f, x)) return false;
  }
  return true;
}

// f^{i,w,n} straight from the set-notation definition.
inline Dense canonical(int n, int w, const std::vector<std::pair<int, int>>& pairs) {
  Mask m = 0, mp = 0;
  std::map<int, int> prime;
  for (auto [a, b] : pairs) {
    m |= Mask{1} << a;
    mp |= Mask{1} << b;
    prime[a] = b;
  }
  const int i = static_cast<int>(pairs.size());
  Dense f;
  for (Mask x : colex_subsets(n, w)) {
    if (std::popcount(x & (m | mp)) != i) continue;
    Mask image = x & mp;
    for (auto [a, b] : prime) {
      if (x & (Mask{1} << a)) image |= Mask{1} << b;
    }
    if (image != mp) continue;
    f[x] = (std::popcount(x & m) % 2) ? -1 : 1;
  }
  return f;
}

// I^{i,w}: for each target vertex, sum over its i-subsets.
inline Dense induce(const Dense& f, int n, int w) {
  Dense g;
  for (Mask x : colex_subsets(n, w)) {
    mpq_class s = 0;
    for (const auto& [y, v] : f) {
      if ((y & x) == y) s += v;
    }
    if (s != 0) g[x] = s;
  }
  return g;
}

inline Dense induce_down(const Dense& f, int n, int w) {
  Dense g;
  for (Mask x : colex_subsets(n, w - 1)) {
    mpq_class s = 0;
    for (const auto& [y, v] : f) {
      if ((x & y) == x) s += v;
    }
    if (s != 0) g[x] = s;
  }
  return g;
}

// Spread the bits of a mask over n-2 coordinates back onto n coordinates, leaving
// holes at j1 and j2.
inline Mask expand(Mask y, int n, int j1, int j2) {
  Mask x = 0;
  int src = 0;
  for (int c = 0; c < n; ++c) {
    if (c == j1 || c == j2) continue;
    if (y & (Mask{1} << src)) x |= Mask{1} << c;
    ++src;
  }
  return x;
}

inline Dense reduce(const Dense& f, int n, int w, int j1, int j2) {
  Dense g;
  for (Mask y : colex_subsets(n - 2, w - 1)) {
    const Mask base = expand(y, n, j1, j2);
    const mpq_class v = at(f, base | (Mask{1} << j1)) - at(f, base | (Mask{1} << j2));
    if (v != 0) g[y] = v;
  }
  return g;
}

inline Mask swap_bits(Mask x, int a, int b) {
  const bool ba = (x >> a) & 1, bb = (x >> b) & 1;
  if (ba == bb) return x;
  return x ^ ((Mask{1} << a) | (Mask{1} << b));
}

inline bool transposition_invariant(const Dense& f, int a, int b) {
  for (const auto& [x, v] : f) {
    if (at(f, swap_bits(x, a, b)) != v) return false;
  }
  return true;
}

// Exact rank with a textbook rational Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      const mpq_class t = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= t * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Minimum support over a column space given by the N x d matrix B, by trying
// every zero set: support = N - max |Z| over Z with rank(B_Z) <= d-1.
// Also returns how many zero sets realize the maximum and are closed (flats).
struct ZeroSetResult {
  std::size_t min_support = 0;
  std::size_t witness_count = 0;
};

inline ZeroSetResult brute_zero_sets(const std::vector<std::vector<mpq_class>>& b) {
  const std::size_t n = b.size();
  const std::size_t d = b.empty() ? 0 : b[0].size();
  std::size_t best = 0;
  std::vector<std::uint32_t> best_sets;
  for (std::uint32_t z = 0; z < (1u << n); ++z) {
    const auto size = static_cast<std::size_t>(std::popcount(z));
    if (size < best) continue;
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t r = 0; r < n; ++r) {
      if (z & (1u << r)) rows.push_back(b[r]);
    }
    if (rational_rank(rows) > d - 1) continue;
    if (size > best) {
      best = size;
      best_sets.clear();
    }
    best_sets.push_back(z);
  }
  return {n - best, best_sets.size()};
}

// Smallest linearly dependent set of columns of an integer matrix M (the
// minimum support of a nonzero vector in ker M) by enumerating column subsets
// in increasing size. Independence is tested mod a prime, which is sound for
// proving independence; each dependent set found mod p is rechecked exactly.
struct CircuitResult {
  std::size_t girth = 0;    // 0 if none found up to max_size
  std::size_t count = 0;    // dependent sets of that size confirmed over Q
};

inline CircuitResult column_girth(const std::vector<std::vector<long>>& m, std::size_t max_size) {
  constexpr std::uint64_t p = 2147483629ULL;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  auto modp = [&](long v) { return static_cast<std::uint64_t>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); };
  auto inv = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::uint64_t>> col(cols, std::vector<std::uint64_t>(rows));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) col[c][r] = modp(m[r][c]);
  }
  auto exact_dependent = [&](const std::vector<std::size_t>& set) {
    std::vector<std::vector<mpq_class>> t(set.size(), std::vector<mpq_class>(rows));
    for (std::size_t k = 0; k < set.size(); ++k) {
      for (std::size_t r = 0; r < rows; ++r) t[k][r] = m[r][set[k]];
    }
    return rational_rank(t) < set.size();
  };

  for (std::size_t size = 1; size <= max_size; ++size) {
    std::size_t count = 0;
    // Stack of reduced vectors with their pivot rows.
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
      for (std::size_t c = start; c + (size - chosen.size()) <= cols; ++c) {
        std::vector<std::uint64_t> v = col[c];
        for (std::size_t k = 0; k < basis.size(); ++k) {
          const std::uint64_t f = v[pivots[k]];
          if (f == 0) continue;
          for (std::size_t r = 0; r < rows; ++r) {
            v[r] = (v[r] + (p - f) * basis[k][r]) % p;
          }
        }
        std::size_t piv = rows;
        for (std::size_t r = 0; r < rows; ++r) {
          if (v[r] != 0) {
            piv = r;
            break;
          }
        }
        chosen.push_back(c);
        if (chosen.size() == size) {
          if (piv == rows && exact_dependent(chosen)) ++count;
        } else if (piv != rows) {
          const std::uint64_t s = inv(v[piv]);
          for (auto& e : v) e = e * s % p;
          basis.push_back(std::move(v));
          pivots.push_back(piv);
          dfs(c + 1);
          basis.pop_back();
          pivots.pop_back();
        }
        chosen.pop_back();
      }
    };
    dfs(0);
    if (count > 0) return {size, count};
  }
  return {};
}

// Number of perfect matchings on 2k points.
inline std::uint64_t double_factorial_odd(int k) {
  std::uint64_t r = 1;
  for (int j = 2 * k - 1; j > 1; j -= 2) r *= static_cast<std::uint64_t>(j);
  return r;
}

// Distinct functions f^{i,i,n} up to scalar, counted by enumerating pairings
// and collecting their supports.
inline std::size_t distinct_canonical_count(int n, int i) {
  std::set<std::set<Mask>> seen;
  std::vector<int> coords;
  std::function<void(std::vector<std::pair<int, int>>&, Mask)> rec =
      [&](std::vector<std::pair<int, int>>& pairs, Mask used) {
        if (static_cast<int>(pairs.size()) == i) {
          std::set<Mask> s;
          for (const auto& [x, v] : canonical(n, i, pairs)) s.insert(x);
          seen.insert(s);
          return;
        }
        int a = 0;
        while (a < n && (used & (Mask{1} << a))) ++a;
        // a is either paired now or left out for good; mark it used in both branches.
        for (int b = a + 1; b < n; ++b) {
          if (used & (Mask{1} << b)) continue;
          pairs.emplace_back(a, b);
          rec(pairs, used | (Mask{1} << a) | (Mask{1} << b));
          pairs.pop_back();
        }
        if (a < n) rec(pairs, used | (Mask{1} << a));
      };
  std::vector<std::pair<int, int>> pairs;
  rec(pairs, 0);
  return seen.size();
}

inline std::vector<std::pair<int, int>> random_pairing(std::mt19937_64& rng, int n, int i) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < i; ++k) pairs.emplace_back(perm[2 * k], perm[2 * k + 1]);
  return pairs;
}

inline mpq_class small_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 3);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle
