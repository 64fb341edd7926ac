#include "jsup/spectral.hpp"

#include <algorithm>
#include <string>

#include "jsup/error.hpp"

namespace jsup {

std::int64_t eigenvalue(int n, int w, int i) {
  return static_cast<std::int64_t>(w - i) * (n - w - i) - i;
}

int max_eigen_index(const JohnsonParams& params) { return std::min(params.w, params.n - params.w); }

std::vector<EigenvalueInfo> spectrum(const JohnsonParams& params) {
  params.validate();
  std::vector<EigenvalueInfo> out;
  for (int i = 0; i <= max_eigen_index(params); ++i) {
    out.push_back({i, eigenvalue(params.n, params.w, i), binomial(params.n, i) - binomial(params.n, i - 1)});
  }
  return out;
}

std::optional<int> eigen_index(const JohnsonParams& params, std::int64_t lambda) {
  for (int i = 0; i <= max_eigen_index(params); ++i) {
    if (eigenvalue(params.n, params.w, i) == lambda) return i;
  }
  return std::nullopt;
}

ExactMatrix adjacency_matrix(const JohnsonParams& params) {
  params.validate();
  const auto count = static_cast<std::size_t>(params.vertex_count());
  ExactMatrix a(count, count);
  for_each_subset(params.n, params.w, [&](VertexSet x) {
    const auto r = static_cast<std::size_t>(rank_subset(x));
    for (VertexSet y : neighbors(x, params)) a(r, static_cast<std::size_t>(rank_subset(y))) = 1;
  });
  return a;
}

SparseFunction EigenspaceBasis::column(std::size_t k) const {
  SparseFunction f(params);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    if (basis(r, k) != 0) f.set(unrank_subset(r, params.n, params.w), basis(r, k));
  }
  return f;
}

SparseFunction EigenspaceBasis::combination(const std::vector<BigRational>& coefficients) const {
  if (coefficients.size() != basis.cols()) {
    throw Error(ErrorCode::parameter_mismatch, "coefficient count differs from eigenspace dimension");
  }
  SparseFunction f(params);
  const auto values = mat_vec(basis, coefficients);
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] != 0) f.set(unrank_subset(r, params.n, params.w), values[r]);
  }
  return f;
}

EigenspaceBasis eigenspace_basis(const JohnsonParams& params, int index, std::size_t dense_budget) {
  params.validate();
  if (index < 0 || index > max_eigen_index(params)) {
    throw Error(ErrorCode::out_of_range, "eigen index " + std::to_string(index) + " outside [0, " +
                                             std::to_string(max_eigen_index(params)) + "]");
  }
  const std::uint64_t count = params.vertex_count();
  if (count > dense_budget) {
    throw Error(ErrorCode::size_budget, "J(" + std::to_string(params.n) + "," + std::to_string(params.w) + ") has " +
                                            std::to_string(count) + " vertices, above the dense budget of " +
                                            std::to_string(dense_budget));
  }
  const std::int64_t lambda = eigenvalue(params.n, params.w, index);
  ExactMatrix m = adjacency_matrix(params);
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, r) -= lambda;
  return {params, index, lambda, nullspace(m)};
}

EigenVerdict is_eigenfunction(const SparseFunction& f, std::int64_t lambda) {
  const SparseFunction g = apply_adjacency(f);
  const BigRational scale = make_rational(lambda);
  EigenVerdict verdict;
  verdict.is_zero = f.is_zero();
  // A violation needs g(x) != lambda f(x), so x lies in supp(f) or supp(g);
  // walk both supports in rank order.
  auto fi = f.begin();
  auto gi = g.begin();
  while (fi != f.end() || gi != g.end()) {
    VertexSet x;
    BigRational lhs = 0;
    BigRational rhs = 0;
    if (gi == g.end() || (fi != f.end() && fi->first < gi->first)) {
      x = fi->first;
      lhs = scale * fi->second;
      ++fi;
    } else if (fi == f.end() || gi->first < fi->first) {
      x = gi->first;
      rhs = gi->second;
      ++gi;
    } else {
      x = fi->first;
      lhs = scale * fi->second;
      rhs = gi->second;
      ++fi;
      ++gi;
    }
    if (lhs != rhs) {
      verdict.certificate = x;
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

}  // namespace jsup
