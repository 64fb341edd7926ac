#include "jsup/minsupport.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>

#include "jsup/canonical.hpp"
#include "jsup/error.hpp"

namespace jsup {

namespace {

using Clock = std::chrono::steady_clock;
using WitnessKey = std::vector<std::pair<std::uint64_t, BigRational>>;

WitnessKey key_of(const SparseFunction& f) {
  WitnessKey key;
  key.reserve(f.support_size());
  for (const auto& [x, v] : f) key.emplace_back(x.bits(), v);
  return key;
}

unsigned worker_count(const SearchOptions& options) {
  if (options.threads != 0) return options.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs tasks 0..count-1 on up to `threads` workers. The first exception is rethrown.
template <typename Fn>
void run_parallel(std::size_t count, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t t = 0; t < count; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) {
        try {
          fn(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

SparseFunction vector_to_function(const JohnsonParams& params, const std::vector<BigRational>& values) {
  SparseFunction f(params);
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] != 0) f.set(unrank_subset(r, params.n, params.w), values[r]);
  }
  return f;
}

void check_witnesses(const SearchReport& report) {
  for (const auto& f : report.witnesses) {
    if (f.support_size() != report.min_support || !is_eigenfunction(f, report.lambda).holds) {
      throw Error(ErrorCode::oracle_disagreement, "search produced a witness that does not verify");
    }
  }
}

// ---------------------------------------------------------------------------
// Branch and bound over zero sets.
//
// The state is a basis v_1..v_m of the functions in the eigenspace that vanish
// on every row forced to zero so far. Forcing row r to zero eliminates one
// basis vector; when a single vector remains the zero set is a hyperplane
// flat and that vector is a candidate. Rows kept nonzero ("out" rows) must
// stay nonzero, so every flat is reached exactly once and the number of out
// rows bounds the final support from below.

struct Overflow {};

struct CheckedInt64 {
  using T = std::int64_t;
  static T from(const BigInteger& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return z.get_si();
  }
  static void combine(T& out, T a, T x, T b, T y) {  // out = a*x - b*y
    T p, q;
    if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) || __builtin_sub_overflow(p, q, &out)) {
      throw Overflow{};
    }
  }
  static void make_primitive(T* v, std::size_t len) {
    T g = 0;
    for (std::size_t k = 0; k < len && g != 1; ++k) {
      if (v[k] == std::numeric_limits<T>::min()) throw Overflow{};
      g = std::gcd(g, v[k] < 0 ? -v[k] : v[k]);
    }
    if (g > 1) {
      for (std::size_t k = 0; k < len; ++k) v[k] /= g;
    }
  }
  static BigRational to_rational(T v) { return BigRational(BigInteger(static_cast<long>(v))); }
};

struct ArbitraryInt {
  using T = BigInteger;
  static T from(const BigInteger& z) { return z; }
  static void combine(T& out, const T& a, const T& x, const T& b, const T& y) {
    mpz_mul(out.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
    mpz_submul(out.get_mpz_t(), b.get_mpz_t(), y.get_mpz_t());
  }
  static void make_primitive(T* v, std::size_t len) {
    BigInteger g = 0;
    for (std::size_t k = 0; k < len && g != 1; ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[k].get_mpz_t());
    if (g > 1) {
      for (std::size_t k = 0; k < len; ++k) mpz_divexact(v[k].get_mpz_t(), v[k].get_mpz_t(), g.get_mpz_t());
    }
  }
  static BigRational to_rational(const T& v) { return BigRational(v); }
};

template <typename Ops>
struct SearchState {
  using T = typename Ops::T;
  std::size_t row = 0;
  std::size_t m = 0;
  std::vector<T> vecs;  // m vectors of length N, vector l at [l*N, (l+1)*N)
  std::vector<std::size_t> outs;
};

template <typename Ops>
struct SubtreeResult {
  using T = typename Ops::T;
  std::size_t best = 0;
  std::vector<std::vector<T>> witnesses;
  std::size_t witness_total = 0;
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kMaxStoredWitnesses = 1u << 15;
inline constexpr int kSplitDecisions = 6;

template <typename Ops>
class ZeroSetSearch {
 public:
  using T = typename Ops::T;

  ZeroSetSearch(std::size_t n_rows, const SearchOptions& options, std::atomic<std::uint64_t>& nodes_used,
                std::atomic<bool>& exhausted)
      : n_(n_rows), options_(options), nodes_used_(nodes_used), exhausted_(exhausted) {}

  // Explores the subtree below `start`; when `frontier` is non-null, stops
  // after `split` branching decisions and stores the open states instead.
  SubtreeResult<Ops> run(SearchState<Ops> start, std::size_t seed_best, int split = -1,
                         std::vector<SearchState<Ops>>* frontier = nullptr) {
    result_ = SubtreeResult<Ops>{};
    result_.best = seed_best;
    frontier_ = frontier;
    outs_ = std::move(start.outs);
    buffers_.assign(start.m + 1, {});
    for (std::size_t k = 0; k <= start.m; ++k) buffers_[k].resize(k * n_);
    buffers_[start.m] = std::move(start.vecs);
    if (start.m == 1) {
      ++result_.nodes;
      leaf(buffers_[1].data());
    } else {
      descend(start.row, start.m, split);
    }
    return std::move(result_);
  }

 private:
  bool zero_column(const std::vector<T>& vecs, std::size_t m, std::size_t r) const {
    for (std::size_t l = 0; l < m; ++l) {
      if (vecs[l * n_ + r] != 0) return false;
    }
    return true;
  }

  void leaf(const T* v) {
    std::size_t support = 0;
    for (std::size_t r = 0; r < n_; ++r) support += (v[r] != 0);
    if (support > result_.best) return;
    if (support < result_.best) {
      result_.best = support;
      result_.witnesses.clear();
      result_.witness_total = 0;
    }
    ++result_.witness_total;
    if (result_.witnesses.size() < kMaxStoredWitnesses) result_.witnesses.emplace_back(v, v + n_);
  }

  void descend(std::size_t r, std::size_t m, int split) {
    if (exhausted_.load(std::memory_order_relaxed)) return;
    ++result_.nodes;
    if (nodes_used_.fetch_add(1, std::memory_order_relaxed) >= options_.node_budget) {
      exhausted_ = true;
      return;
    }
    const std::vector<T>& vecs = buffers_[m];
    while (r < n_ && zero_column(vecs, m, r)) ++r;
    if (r == n_) return;  // zero set stayed below rank d-1
    if (n_ - r < m - 1) return;

    if (split == 0 && frontier_ != nullptr) {
      frontier_->push_back({r, m, vecs, outs_});
      return;
    }
    const int next_split = split > 0 ? split - 1 : split;

    // Force row r to zero.
    std::size_t pivot = 0;
    while (vecs[pivot * n_ + r] == 0) ++pivot;
    std::vector<T>& reduced = buffers_[m - 1];
    const T& pr = vecs[pivot * n_ + r];
    std::size_t slot = 0;
    for (std::size_t l = 0; l < m; ++l) {
      if (l == pivot) continue;
      const T& lr = vecs[l * n_ + r];
      T* dst = reduced.data() + slot * n_;
      const T* src = vecs.data() + l * n_;
      const T* piv = vecs.data() + pivot * n_;
      if (lr == 0) {
        std::copy(src, src + n_, dst);
      } else {
        for (std::size_t k = 0; k < n_; ++k) Ops::combine(dst[k], pr, src[k], lr, piv[k]);
        Ops::make_primitive(dst, n_);
      }
      ++slot;
    }
    bool keeps_outs = true;
    for (std::size_t q : outs_) {
      if (zero_column(reduced, m - 1, q)) {
        keeps_outs = false;
        break;
      }
    }
    if (keeps_outs) {
      if (m - 1 == 1) {
        ++result_.nodes;
        leaf(reduced.data());
      } else {
        descend(r + 1, m - 1, next_split);
      }
    }

    // Keep row r nonzero.
    if (!options_.prune || outs_.size() + 1 <= result_.best) {
      outs_.push_back(r);
      descend(r + 1, m, next_split);
      outs_.pop_back();
    }
  }

  std::size_t n_;
  const SearchOptions& options_;
  std::atomic<std::uint64_t>& nodes_used_;
  std::atomic<bool>& exhausted_;
  std::vector<std::vector<T>> buffers_;  // buffers_[m] holds the current m-vector state
  std::vector<std::size_t> outs_;
  std::vector<SearchState<Ops>>* frontier_ = nullptr;
  SubtreeResult<Ops> result_;
};

template <typename Ops>
SearchReport run_bnb(const EigenspaceBasis& basis, const SearchOptions& options) {
  using T = typename Ops::T;
  const std::size_t n_rows = basis.basis.rows();
  const std::size_t d = basis.basis.cols();

  // Columns scaled to primitive integer vectors.
  SearchState<Ops> root{0, d, std::vector<T>(d * n_rows), {}};
  std::size_t seed = n_rows;
  for (std::size_t l = 0; l < d; ++l) {
    BigInteger den_lcm = 1;
    for (std::size_t r = 0; r < n_rows; ++r) den_lcm = lcm(den_lcm, BigInteger(basis.basis(r, l).get_den()));
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < n_rows; ++r) {
      const BigRational scaled = basis.basis(r, l) * den_lcm;
      root.vecs[l * n_rows + r] = Ops::from(scaled.get_num());
      nnz += scaled != 0;
    }
    Ops::make_primitive(root.vecs.data() + l * n_rows, n_rows);
    seed = std::min(seed, nnz);
  }

  std::atomic<std::uint64_t> nodes_used{0};
  std::atomic<bool> exhausted{false};

  // Fixed split depth so that results and node counts do not depend on the
  // number of workers.
  std::vector<SearchState<Ops>> frontier;
  ZeroSetSearch<Ops> splitter(n_rows, options, nodes_used, exhausted);
  SubtreeResult<Ops> top = splitter.run(root, seed, d > 1 ? kSplitDecisions : -1, &frontier);

  std::vector<SubtreeResult<Ops>> parts(frontier.size());
  run_parallel(frontier.size(), worker_count(options), [&](std::size_t t) {
    ZeroSetSearch<Ops> search(n_rows, options, nodes_used, exhausted);
    parts[t] = search.run(std::move(frontier[t]), seed);
  });

  std::size_t best = top.best;
  std::uint64_t nodes = top.nodes;
  for (const auto& p : parts) {
    best = std::min(best, p.best);
    nodes += p.nodes;
  }

  SearchReport report;
  report.params = basis.params;
  report.index = basis.index;
  report.lambda = basis.lambda;
  report.dimension = d;
  report.min_support = best;
  report.optimal = !exhausted;
  report.algorithm = "bnb";
  report.hyperplane_status = "not-run";
  report.stats.nodes = nodes;

  std::map<WitnessKey, SparseFunction> unique;
  auto absorb = [&](const SubtreeResult<Ops>& part) {
    if (part.best != best) return;
    report.witness_total += part.witness_total;
    for (const auto& v : part.witnesses) {
      std::vector<BigRational> values(n_rows);
      for (std::size_t r = 0; r < n_rows; ++r) values[r] = Ops::to_rational(v[r]);
      SparseFunction f = normalize_integral(vector_to_function(basis.params, values));
      unique.emplace(key_of(f), std::move(f));
    }
  };
  absorb(top);
  for (const auto& p : parts) absorb(p);
  for (auto& [key, f] : unique) {
    if (report.witnesses.size() >= options.witness_cap) break;
    report.witnesses.push_back(std::move(f));
  }
  return report;
}

}  // namespace

SearchReport min_support_bnb(const EigenspaceBasis& basis, const SearchOptions& options) {
  if (basis.dimension() == 0) throw Error(ErrorCode::unsupported_shape, "eigenspace basis is empty");
  const auto start = Clock::now();
  SearchReport report;
  try {
    report = run_bnb<CheckedInt64>(basis, options);
  } catch (const Overflow&) {
    report = run_bnb<ArbitraryInt>(basis, options);
  }
  check_witnesses(report);
  report.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  annotate_with_bound(report);
  return report;
}

// ---------------------------------------------------------------------------
// Hyperplane enumeration: every (d-1)-subset of rows, rank checked and
// solved with the general exact linear algebra routines.

SearchReport min_support_hyperplane(const EigenspaceBasis& basis, const SearchOptions& options) {
  const std::size_t n_rows = basis.basis.rows();
  const std::size_t d = basis.basis.cols();
  if (d < 2) throw Error(ErrorCode::unsupported_shape, "instance shape unsupported; use bnb");
  const std::size_t k = d - 1;
  const BigInteger subsets = binomial(static_cast<long>(n_rows), static_cast<long>(k));
  if (subsets > BigInteger(static_cast<unsigned long>(options.subset_budget))) {
    throw Error(ErrorCode::size_budget, "C(" + std::to_string(n_rows) + "," + std::to_string(k) + ") = " +
                                            to_string(subsets) + " subsets exceed the budget of " +
                                            std::to_string(options.subset_budget));
  }
  const auto start = Clock::now();

  struct Part {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::map<WitnessKey, SparseFunction> witnesses;
    std::uint64_t subsets = 0;
    std::uint64_t hyperplanes = 0;
  };
  // One task per smallest row index.
  const std::size_t first_limit = n_rows - k + 1;
  std::vector<Part> parts(first_limit);
  run_parallel(first_limit, worker_count(options), [&](std::size_t first) {
    Part& part = parts[first];
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), first);
    ExactMatrix sub(k, d);
    for (;;) {
      ++part.subsets;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t c = 0; c < d; ++c) sub(a, c) = basis.basis(idx[a], c);
      }
      const ExactMatrix normal = nullspace(sub);
      if (normal.cols() == 1) {
        ++part.hyperplanes;
        const auto values = mat_vec(basis.basis, normal.column(0));
        const auto support =
            static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](const BigRational& q) { return q != 0; }));
        if (support <= part.best) {
          if (support < part.best) {
            part.best = support;
            part.witnesses.clear();
          }
          SparseFunction f = normalize_integral(vector_to_function(basis.params, values));
          part.witnesses.emplace(key_of(f), std::move(f));
        }
      }
      // Advance idx[1..k-1] as a combination of rows after `first`.
      std::size_t pos = k;
      while (pos > 1 && idx[pos - 1] == n_rows - k + pos - 1) --pos;
      if (pos <= 1) break;
      ++idx[pos - 1];
      for (std::size_t a = pos; a < k; ++a) idx[a] = idx[a - 1] + 1;
    }
  });

  SearchReport report;
  report.params = basis.params;
  report.index = basis.index;
  report.lambda = basis.lambda;
  report.dimension = d;
  report.optimal = true;
  report.algorithm = "hyperplane";
  report.hyperplane_status = "agreed";
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& p : parts) {
    best = std::min(best, p.best);
    report.stats.subsets += p.subsets;
    report.stats.hyperplanes += p.hyperplanes;
  }
  std::map<WitnessKey, SparseFunction> unique;
  for (auto& p : parts) {
    if (p.best == best) unique.merge(p.witnesses);
  }
  report.min_support = best;
  report.witness_total = unique.size();
  for (auto& [key, f] : unique) {
    if (report.witnesses.size() >= options.witness_cap) break;
    report.witnesses.push_back(std::move(f));
  }
  check_witnesses(report);
  report.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  annotate_with_bound(report);
  return report;
}

void annotate_with_bound(SearchReport& report) {
  const JohnsonParams& p = report.params;
  report.bound = support_size_bound(p.n, p.w, report.index);
  report.attained_by_canonical = false;
  report.all_witnesses_canonical = false;
  if (BigInteger(static_cast<unsigned long>(report.min_support)) != report.bound || report.witnesses.empty()) return;
  std::size_t matched = 0;
  for (const auto& f : report.witnesses) matched += match_canonical(f, report.index).has_value();
  report.attained_by_canonical = matched > 0;
  report.all_witnesses_canonical = matched == report.witnesses.size();
}

SearchReport verify_bound(const JohnsonParams& params, int index, const SearchOptions& options, Algorithm algorithm,
                          std::size_t dense_budget) {
  const EigenspaceBasis basis = eigenspace_basis(params, index, dense_budget);
  if (algorithm == Algorithm::hyperplane) return min_support_hyperplane(basis, options);

  SearchReport report = min_support_bnb(basis, options);
  if (algorithm == Algorithm::bnb) return report;

  if (basis.dimension() < 2) {
    report.hyperplane_status = "skipped:shape";
    return report;
  }
  SearchReport other;
  try {
    other = min_support_hyperplane(basis, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::size_budget) throw;
    report.hyperplane_status = "skipped:size";
    return report;
  }
  report.stats.subsets = other.stats.subsets;
  report.stats.hyperplanes = other.stats.hyperplanes;
  report.stats.elapsed_seconds += other.stats.elapsed_seconds;
  report.algorithm = "bnb+hyperplane";
  if (!report.optimal) {
    // The exhausted search is only a bound; keep the better of the two.
    if (other.min_support < report.min_support) {
      report.min_support = other.min_support;
      report.witnesses = other.witnesses;
      report.witness_total = other.witness_total;
      annotate_with_bound(report);
    }
    report.hyperplane_status = "unconfirmed";
    return report;
  }
  if (other.min_support != report.min_support || other.witness_total != report.witness_total ||
      !(other.witnesses == report.witnesses)) {
    throw Error(ErrorCode::oracle_disagreement,
                "branch-and-bound found " + std::to_string(report.min_support) + " (" +
                    std::to_string(report.witness_total) + " witnesses), hyperplane enumeration found " +
                    std::to_string(other.min_support) + " (" + std::to_string(other.witness_total) + ")");
  }
  report.hyperplane_status = "agreed";
  return report;
}

}  // namespace jsup
