#pragma once

// Matrix-free model of the Johnson graph J(n,w): vertices are w-subsets of
// {0..n-1}, adjacent when they share exactly w-1 elements.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "jsup/combinatorics.hpp"
#include "jsup/numeric.hpp"

namespace jsup {

struct JohnsonParams {
  int n = 0;
  int w = 0;

  // Throws invalid_argument unless 0 <= w <= n <= 64.
  void validate() const;
  std::uint64_t vertex_count() const { return binomial_u64(n, w); }
  int degree() const { return w * (n - w); }
  bool has_vertex(VertexSet x) const { return x.n() == n && x.weight() == w; }

  friend bool operator==(const JohnsonParams&, const JohnsonParams&) = default;
};

/// Exact rational function on the vertices of J(n,w). Only nonzero values are
/// stored, so the support is the key set. Iteration is in vertex rank order.
class SparseFunction {
 public:
  using Map = std::map<VertexSet, BigRational>;
  using const_iterator = Map::const_iterator;

  SparseFunction() = default;
  explicit SparseFunction(JohnsonParams params);

  static SparseFunction constant(JohnsonParams params, const BigRational& value);

  const JohnsonParams& params() const noexcept { return params_; }

  BigRational value(VertexSet x) const;
  void set(VertexSet x, const BigRational& v);
  void add(VertexSet x, const BigRational& v);

  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::vector<VertexSet> support() const;

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  SparseFunction& operator+=(const SparseFunction& other);
  SparseFunction& operator-=(const SparseFunction& other);
  SparseFunction& operator*=(const BigRational& scalar);

  friend SparseFunction operator+(SparseFunction a, const SparseFunction& b) { return a += b; }
  friend SparseFunction operator-(SparseFunction a, const SparseFunction& b) { return a -= b; }
  friend SparseFunction operator*(const BigRational& s, SparseFunction f) { return f *= s; }
  friend SparseFunction operator-(SparseFunction f) { return f *= BigRational(-1); }

  friend bool operator==(const SparseFunction& a, const SparseFunction& b) {
    return a.params_ == b.params_ && a.entries_ == b.entries_;
  }

 private:
  void check_vertex(VertexSet x) const;

  JohnsonParams params_;
  Map entries_;
};

bool adjacent(VertexSet x, VertexSet y);
int johnson_distance(VertexSet x, VertexSet y);

/// All x - a + b with a in x, b not in x; w(n-w) results in rank order.
std::vector<VertexSet> neighbors(VertexSet x, const JohnsonParams& params);

/// g(x) = sum of f over the neighbours of x.
SparseFunction apply_adjacency(const SparseFunction& f);

/// Scales f to coprime integer values, positive on its lowest-rank support
/// vertex. The zero function is returned unchanged.
SparseFunction normalize_integral(const SparseFunction& f);

}  // namespace jsup
