#pragma once

// Induction between Johnson graphs, the pair reduction f_{j1,j2}, and the
// coordinate partition generated by vanishing reductions.

#include <utility>
#include <vector>

#include "jsup/johnson.hpp"

namespace jsup {

/// I^{i,w}(f)(x) = sum of f(y) over the i-subsets y of x, for f on J(n,i), i <= w <= n.
SparseFunction induce(const SparseFunction& f, int target_w);

/// g(x) = sum of f(y) over the w-supersets y of the (w-1)-set x. Requires w >= 1.
SparseFunction induce_down_one(const SparseFunction& f);

/// A reduced function together with the original index of every surviving
/// coordinate (origin[k] is the source coordinate of coordinate k).
struct ReducedFunction {
  SparseFunction function;
  std::vector<int> origin;
};

/// f_{j1,j2}(y) = f(y + j1) - f(y + j2) on J(n-2, w-1); the surviving
/// coordinates keep their relative order.
SparseFunction reduce(const SparseFunction& f, int j1, int j2);

/// Left-to-right composition of reduce; each pair indexes the current graph.
ReducedFunction iterated_reduce(const SparseFunction& f, const std::vector<std::pair<int, int>>& pairs);

/// As iterated_reduce, but every pair names coordinates of the original graph.
ReducedFunction iterated_reduce_original(const SparseFunction& f,
                                         const std::vector<std::pair<int, int>>& pairs);

/// True iff reduce(f, j1, j2) vanishes, i.e. f is invariant under swapping j1 and j2.
bool zero_pair(const SparseFunction& f, int j1, int j2);

struct PartitionResult {
  std::vector<std::vector<int>> blocks;  // each sorted; blocks ordered by smallest element
  int t() const { return static_cast<int>(blocks.size()); }
};

PartitionResult coordinate_partition(const SparseFunction& f);

}  // namespace jsup
