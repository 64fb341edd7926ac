#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jsup/exact_linalg.hpp"
#include "jsup/johnson.hpp"

namespace jsup {

inline constexpr std::size_t kDefaultDenseBudget = 512;

/// lambda_i(n,w) = (w-i)(n-w-i) - i, evaluated for any integers.
std::int64_t eigenvalue(int n, int w, int i);

/// Largest eigen index of J(n,w): min(w, n-w). The formula's indices beyond
/// it are not eigenvalues (J(n,w) and J(n,n-w) are isomorphic).
int max_eigen_index(const JohnsonParams& params);

struct EigenvalueInfo {
  int index = 0;
  std::int64_t lambda = 0;
  BigInteger multiplicity;  // C(n,i) - C(n,i-1)
};

/// Entries for i = 0 .. max_eigen_index, sorted by i.
std::vector<EigenvalueInfo> spectrum(const JohnsonParams& params);

/// The unique eigen index whose eigenvalue is lambda, if any. The map is
/// injective on 0..max_eigen_index because consecutive eigenvalues differ by n-2i > 0.
std::optional<int> eigen_index(const JohnsonParams& params, std::int64_t lambda);

ExactMatrix adjacency_matrix(const JohnsonParams& params);

struct EigenspaceBasis {
  JohnsonParams params;
  int index = 0;
  std::int64_t lambda = 0;
  ExactMatrix basis;  // C(n,w) rows in rank order, one column per basis vector

  std::size_t dimension() const { return basis.cols(); }
  SparseFunction column(std::size_t k) const;
  // Linear combination sum_k coefficients[k] * column(k).
  SparseFunction combination(const std::vector<BigRational>& coefficients) const;
};

/// Exact basis of the lambda_i eigenspace via nullspace(A - lambda_i I).
/// Throws size_budget when C(n,w) > dense_budget and out_of_range for an
/// index outside 0..max_eigen_index.
EigenspaceBasis eigenspace_basis(const JohnsonParams& params, int index,
                                 std::size_t dense_budget = kDefaultDenseBudget);

struct EigenVerdict {
  bool holds = false;
  bool is_zero = false;
  std::optional<VertexSet> certificate;  // lowest-rank violating vertex
};

/// Checks lambda f(x) = sum over neighbours of f, on supp(f) and its
/// neighbourhood; every other vertex satisfies 0 = 0.
EigenVerdict is_eigenfunction(const SparseFunction& f, std::int64_t lambda);

}  // namespace jsup
