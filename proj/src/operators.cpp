#include "jsup/operators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "jsup/error.hpp"

namespace jsup {

namespace {

SparseFunction collect(JohnsonParams params, const std::unordered_map<std::uint64_t, BigRational>& acc) {
  SparseFunction g(params);
  for (const auto& [bits, v] : acc) {
    if (v != 0) g.set(VertexSet::from_bits(bits, params.n), v);
  }
  return g;
}

std::uint64_t remove_bit(std::uint64_t x, int k) {
  const std::uint64_t low = x & ((std::uint64_t{1} << k) - 1);
  return low | ((x >> (k + 1)) << k);
}

void check_coordinate_pair(const JohnsonParams& p, int j1, int j2) {
  if (j1 < 0 || j1 >= p.n || j2 < 0 || j2 >= p.n) {
    throw Error(ErrorCode::out_of_range, "coordinate pair (" + std::to_string(j1) + "," + std::to_string(j2) +
                                             ") outside [0, " + std::to_string(p.n) + ")");
  }
  if (j1 == j2) throw Error(ErrorCode::invalid_argument, "reduction needs two distinct coordinates");
}

}  // namespace

SparseFunction induce(const SparseFunction& f, int target_w) {
  const JohnsonParams& p = f.params();
  if (target_w < p.w || target_w > p.n) {
    throw Error(ErrorCode::invalid_argument, "induce needs w <= target weight <= n (got " + std::to_string(p.w) +
                                                 " -> " + std::to_string(target_w) + ")");
  }
  const JohnsonParams q{p.n, target_w};
  const int extra = target_w - p.w;
  std::unordered_map<std::uint64_t, BigRational> acc;
  std::vector<int> outside;
  for (const auto& [y, v] : f) {
    outside.clear();
    for (int c = 0; c < p.n; ++c) {
      if (!y.contains(c)) outside.push_back(c);
    }
    for_each_subset(static_cast<int>(outside.size()), extra, [&](VertexSet s) {
      std::uint64_t bits = y.bits();
      for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) bits |= std::uint64_t{1} << outside[std::countr_zero(b)];
      acc[bits] += v;
    });
  }
  return collect(q, acc);
}

SparseFunction induce_down_one(const SparseFunction& f) {
  const JohnsonParams& p = f.params();
  if (p.w == 0) throw Error(ErrorCode::invalid_argument, "induce_down_one needs w >= 1");
  std::unordered_map<std::uint64_t, BigRational> acc;
  for (const auto& [y, v] : f) {
    for (std::uint64_t a = y.bits(); a != 0; a &= a - 1) acc[y.bits() & ~(a & (~a + 1))] += v;
  }
  return collect({p.n, p.w - 1}, acc);
}

SparseFunction reduce(const SparseFunction& f, int j1, int j2) {
  const JohnsonParams& p = f.params();
  if (p.n < 2 || p.w < 1) throw Error(ErrorCode::invalid_argument, "reduction needs n >= 2 and w >= 1");
  check_coordinate_pair(p, j1, j2);
  const int lo = std::min(j1, j2);
  const int hi = std::max(j1, j2);
  const std::uint64_t b1 = std::uint64_t{1} << j1;
  const std::uint64_t b2 = std::uint64_t{1} << j2;
  std::unordered_map<std::uint64_t, BigRational> acc;
  for (const auto& [x, v] : f) {
    const bool has1 = x.bits() & b1;
    const bool has2 = x.bits() & b2;
    if (has1 == has2) continue;
    const std::uint64_t y = remove_bit(remove_bit(x.bits() & ~(b1 | b2), hi), lo);
    if (has1) {
      acc[y] += v;
    } else {
      acc[y] -= v;
    }
  }
  return collect({p.n - 2, p.w - 1}, acc);
}

ReducedFunction iterated_reduce(const SparseFunction& f, const std::vector<std::pair<int, int>>& pairs) {
  ReducedFunction out{f, std::vector<int>(static_cast<std::size_t>(f.params().n))};
  std::iota(out.origin.begin(), out.origin.end(), 0);
  for (const auto& [a, b] : pairs) {
    out.function = reduce(out.function, a, b);
    out.origin.erase(out.origin.begin() + std::max(a, b));
    out.origin.erase(out.origin.begin() + std::min(a, b));
  }
  return out;
}

ReducedFunction iterated_reduce_original(const SparseFunction& f, const std::vector<std::pair<int, int>>& pairs) {
  ReducedFunction out{f, std::vector<int>(static_cast<std::size_t>(f.params().n))};
  std::iota(out.origin.begin(), out.origin.end(), 0);
  auto current = [&](int original) {
    const auto it = std::find(out.origin.begin(), out.origin.end(), original);
    if (it == out.origin.end()) {
      throw Error(ErrorCode::out_of_range, "coordinate " + std::to_string(original) + " was already reduced away");
    }
    return static_cast<int>(it - out.origin.begin());
  };
  for (const auto& [a, b] : pairs) {
    const int ca = current(a);
    const int cb = current(b);
    out.function = reduce(out.function, ca, cb);
    out.origin.erase(out.origin.begin() + std::max(ca, cb));
    out.origin.erase(out.origin.begin() + std::min(ca, cb));
  }
  return out;
}

bool zero_pair(const SparseFunction& f, int j1, int j2) {
  check_coordinate_pair(f.params(), j1, j2);
  const std::uint64_t swap_mask = (std::uint64_t{1} << j1) | (std::uint64_t{1} << j2);
  for (const auto& [x, v] : f) {
    const std::uint64_t both = x.bits() & swap_mask;
    if (both == 0 || both == swap_mask) continue;
    if (f.value(VertexSet::from_bits(x.bits() ^ swap_mask, x.n())) != v) return false;
  }
  return true;
}

PartitionResult coordinate_partition(const SparseFunction& f) {
  const int n = f.params().n;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int ra = find(a);
      const int rb = find(b);
      if (ra == rb) continue;  // already joined; zero pairs are transitive
      if (zero_pair(f, a, b)) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) by_root[find(c)].push_back(c);
  PartitionResult out;
  for (auto& block : by_root) {
    if (!block.empty()) out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace jsup
