#include "jsup/johnson.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "jsup/error.hpp"

namespace jsup {

void JohnsonParams::validate() const {
  if (n < 0 || n > kMaxCoordinates || w < 0 || w > n) {
    throw Error(ErrorCode::invalid_argument,
                "invalid Johnson parameters J(" + std::to_string(n) + "," + std::to_string(w) + ")");
  }
}

SparseFunction::SparseFunction(JohnsonParams params) : params_(params) { params_.validate(); }

SparseFunction SparseFunction::constant(JohnsonParams params, const BigRational& value) {
  SparseFunction f(params);
  if (value != 0) {
    for_each_subset(params.n, params.w, [&](VertexSet x) { f.entries_.emplace_hint(f.entries_.end(), x, value); });
  }
  return f;
}

void SparseFunction::check_vertex(VertexSet x) const {
  if (!params_.has_vertex(x)) {
    throw Error(ErrorCode::parameter_mismatch, "vertex is not a vertex of J(" + std::to_string(params_.n) + "," +
                                                   std::to_string(params_.w) + ")");
  }
}

BigRational SparseFunction::value(VertexSet x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? BigRational(0) : it->second;
}

void SparseFunction::set(VertexSet x, const BigRational& v) {
  check_vertex(x);
  if (v == 0) {
    entries_.erase(x);
  } else {
    entries_[x] = v;
  }
}

void SparseFunction::add(VertexSet x, const BigRational& v) {
  check_vertex(x);
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace(x, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

std::vector<VertexSet> SparseFunction::support() const {
  std::vector<VertexSet> out;
  out.reserve(entries_.size());
  for (const auto& [x, v] : entries_) out.push_back(x);
  return out;
}

SparseFunction& SparseFunction::operator+=(const SparseFunction& other) {
  if (!(params_ == other.params_)) throw Error(ErrorCode::parameter_mismatch, "adding functions on different graphs");
  for (const auto& [x, v] : other.entries_) add(x, v);
  return *this;
}

SparseFunction& SparseFunction::operator-=(const SparseFunction& other) {
  if (!(params_ == other.params_)) throw Error(ErrorCode::parameter_mismatch, "subtracting functions on different graphs");
  for (const auto& [x, v] : other.entries_) add(x, -v);
  return *this;
}

SparseFunction& SparseFunction::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    entries_.clear();
  } else {
    for (auto& [x, v] : entries_) v *= scalar;
  }
  return *this;
}

namespace {

void require_same_graph(VertexSet x, VertexSet y) {
  if (x.n() != y.n() || x.weight() != y.weight()) {
    throw Error(ErrorCode::parameter_mismatch, "vertices belong to different Johnson graphs");
  }
}

}  // namespace

bool adjacent(VertexSet x, VertexSet y) {
  require_same_graph(x, y);
  return std::popcount(x.bits() & y.bits()) == x.weight() - 1;
}

int johnson_distance(VertexSet x, VertexSet y) {
  require_same_graph(x, y);
  return std::popcount(x.bits() & ~y.bits());
}

std::vector<VertexSet> neighbors(VertexSet x, const JohnsonParams& params) {
  if (!params.has_vertex(x)) throw Error(ErrorCode::parameter_mismatch, "vertex does not belong to the graph");
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(params.degree()));
  const std::uint64_t full = params.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << params.n) - 1;
  const std::uint64_t outside = full & ~x.bits();
  for (std::uint64_t a = x.bits(); a != 0; a &= a - 1) {
    const std::uint64_t drop = a & (~a + 1);
    for (std::uint64_t b = outside; b != 0; b &= b - 1) {
      const std::uint64_t take = b & (~b + 1);
      out.push_back(VertexSet::from_bits((x.bits() & ~drop) | take, params.n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SparseFunction apply_adjacency(const SparseFunction& f) {
  const JohnsonParams& p = f.params();
  std::unordered_map<std::uint64_t, BigRational> acc;
  acc.reserve(f.support_size() * static_cast<std::size_t>(p.degree() + 1));
  const std::uint64_t full = p.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.n) - 1;
  for (const auto& [y, v] : f) {
    const std::uint64_t outside = full & ~y.bits();
    for (std::uint64_t a = y.bits(); a != 0; a &= a - 1) {
      const std::uint64_t kept = y.bits() & ~(a & (~a + 1));
      for (std::uint64_t b = outside; b != 0; b &= b - 1) acc[kept | (b & (~b + 1))] += v;
    }
  }
  SparseFunction g(p);
  for (const auto& [bits, v] : acc) {
    if (v != 0) g.set(VertexSet::from_bits(bits, p.n), v);
  }
  return g;
}

SparseFunction normalize_integral(const SparseFunction& f) {
  if (f.is_zero()) return f;
  BigInteger num_gcd = 0;
  BigInteger den_lcm = 1;
  for (const auto& [x, v] : f) {
    num_gcd = gcd(num_gcd, BigInteger(v.get_num()));
    den_lcm = lcm(den_lcm, BigInteger(v.get_den()));
  }
  BigRational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.begin()->second < 0) scale = -scale;
  SparseFunction g = f;
  g *= scale;
  return g;
}

}  // namespace jsup
