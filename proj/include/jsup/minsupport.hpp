#pragma once

// Exact minimum-support search over an eigenspace. A vector B c of the span
// vanishes on a flat of the row configuration of B; minimum-support vectors
// are exactly those whose zero set is a hyperplane flat (rank d-1). Two
// independent searches are provided:
//
//   * min_support_bnb: depth-first search over the rows in rank order, each
//     row either forced to zero or kept nonzero, pruned on the count of kept
//     rows against the incumbent. This is the authoritative oracle.
//   * min_support_hyperplane: enumerates every (d-1)-subset of rows, keeps the
//     ones of rank d-1 and counts the rows on the spanned hyperplane.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jsup/johnson.hpp"
#include "jsup/spectral.hpp"

namespace jsup {

struct SearchOptions {
  std::uint64_t node_budget = 200'000'000;  // bnb
  std::uint64_t subset_budget = 2'000'000;  // hyperplane: C(N, d-1) limit
  std::size_t witness_cap = 16;
  bool prune = true;     // bnb incumbent pruning; off = exhaustive flat enumeration
  unsigned threads = 0;  // 0 = hardware concurrency
};

enum class Algorithm { bnb, hyperplane, both };

struct SearchStats {
  std::uint64_t nodes = 0;        // bnb search nodes
  std::uint64_t subsets = 0;      // hyperplane: (d-1)-subsets examined
  std::uint64_t hyperplanes = 0;  // hyperplane: subsets of rank d-1
  double elapsed_seconds = 0.0;
};

struct SearchReport {
  JohnsonParams params;
  int index = 0;
  std::int64_t lambda = 0;
  std::size_t dimension = 0;

  std::size_t min_support = 0;
  bool optimal = false;  // false only when the bnb node budget ran out
  std::vector<SparseFunction> witnesses;  // normalized, canonical order, at most witness_cap
  std::size_t witness_total = 0;          // distinct minimum witnesses found (up to scalar)

  BigInteger bound;
  bool attained_by_canonical = false;    // min == bound and some witness is a scaled f^{i,w,n}
  bool all_witnesses_canonical = false;  // min == bound and every reported witness is

  std::string algorithm;        // "bnb", "hyperplane" or "bnb+hyperplane"
  std::string hyperplane_status;  // "agreed", "not-run", "skipped:shape", "skipped:size"
  SearchStats stats;
};

/// Requires basis.dimension() >= 1.
SearchReport min_support_bnb(const EigenspaceBasis& basis, const SearchOptions& options = {});

/// Requires basis.dimension() >= 2 (unsupported_shape) and C(N, d-1) within
/// options.subset_budget (size_budget).
SearchReport min_support_hyperplane(const EigenspaceBasis& basis, const SearchOptions& options = {});

/// Fills bound, attained_by_canonical and all_witnesses_canonical.
void annotate_with_bound(SearchReport& report);

/// Runs the requested oracle(s) on the lambda_i eigenspace of J(n,w). With
/// Algorithm::both the hyperplane oracle runs whenever its shape and subset
/// budget allow it; a disagreement throws oracle_disagreement.
SearchReport verify_bound(const JohnsonParams& params, int index, const SearchOptions& options = {},
                          Algorithm algorithm = Algorithm::both,
                          std::size_t dense_budget = kDefaultDenseBudget);

}  // namespace jsup
