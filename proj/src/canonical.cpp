#include "jsup/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "jsup/error.hpp"
#include "jsup/operators.hpp"

namespace jsup {

void PairingConfig::validate(int n) const {
  std::uint64_t seen = 0;
  for (const auto& [a, b] : pairs) {
    for (int c : {a, b}) {
      if (c < 0 || c >= n) {
        throw Error(ErrorCode::invalid_argument, "pairing coordinate " + std::to_string(c) + " outside [0, n)");
      }
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (seen & bit) throw Error(ErrorCode::invalid_argument, "pairing repeats coordinate " + std::to_string(c));
      seen |= bit;
    }
  }
}

std::string PairingConfig::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out << ',';
    out << pairs[k].first << ':' << pairs[k].second;
  }
  return out.str();
}

PairingConfig default_pairing(int i) {
  PairingConfig p;
  for (int k = 0; k < i; ++k) p.pairs.emplace_back(2 * k, 2 * k + 1);
  return p;
}

PairingConfig parse_pairing(const std::string& text) {
  PairingConfig p;
  if (text.empty()) return p;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::parse_error, "pair '" + item + "' is not of the form a:b");
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string left = item.substr(0, colon);
      const std::string right = item.substr(colon + 1);
      const int a = std::stoi(left, &used_a);
      const int b = std::stoi(right, &used_b);
      if (used_a != left.size() || used_b != right.size()) throw std::invalid_argument(item);
      p.pairs.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::parse_error, "pair '" + item + "' is not of the form a:b");
    }
  }
  std::vector<int> coords;
  for (auto [a, b] : p.pairs) {
    coords.push_back(a);
    coords.push_back(b);
  }
  std::sort(coords.begin(), coords.end());
  if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
    throw Error(ErrorCode::invalid_argument, "pairing '" + text + "' repeats a coordinate");
  }
  return p;
}

BigInteger support_size_bound(int n, int w, int i) {
  if (n - 2 * i < 0) return 0;
  BigInteger r = binomial(n - 2 * i, w - i);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
  return r;
}

SparseFunction build_canonical(const JohnsonParams& params, int i, const PairingConfig& pairing) {
  params.validate();
  if (i < 0 || i > params.w) {
    throw Error(ErrorCode::invalid_argument, "canonical function needs 0 <= i <= w");
  }
  if (params.w - i > params.n - 2 * i) {
    throw Error(ErrorCode::invalid_argument, "canonical function needs w - i <= n - 2i");
  }
  if (pairing.size() != i) {
    throw Error(ErrorCode::invalid_argument, "pairing has " + std::to_string(pairing.size()) + " pairs, expected " +
                                                 std::to_string(i));
  }
  pairing.validate(params.n);

  std::uint64_t paired = 0;
  for (const auto& [a, b] : pairing.pairs) paired |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  std::vector<int> rest;
  for (int c = 0; c < params.n; ++c) {
    if (!((paired >> c) & 1u)) rest.push_back(c);
  }

  SparseFunction f(params);
  const BigRational plus(1);
  const BigRational minus(-1);
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << i); ++choice) {
    // Bit k of choice picks m_k (from M) over m'_k.
    std::uint64_t core = 0;
    for (int k = 0; k < i; ++k) {
      const auto& [m, mp] = pairing.pairs[static_cast<std::size_t>(k)];
      core |= std::uint64_t{1} << (((choice >> k) & 1u) ? m : mp);
    }
    const BigRational& value = (std::popcount(choice) % 2) ? minus : plus;
    for_each_subset(static_cast<int>(rest.size()), params.w - i, [&](VertexSet s) {
      std::uint64_t bits = core;
      for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) bits |= std::uint64_t{1} << rest[std::countr_zero(b)];
      f.set(VertexSet::from_bits(bits, params.n), value);
    });
  }
  return f;
}

namespace {

// Tries to read a pairing off f given the 2i paired coordinates.
std::optional<CanonicalMatch> match_on(const SparseFunction& f, int i, const std::vector<int>& coords) {
  const JohnsonParams& p = f.params();
  std::uint64_t pmask = 0;
  for (int c : coords) pmask |= std::uint64_t{1} << c;
  const VertexSet x0 = f.begin()->first;
  const std::uint64_t side_a = x0.bits() & pmask;
  const std::uint64_t side_b = pmask & ~x0.bits();
  if (std::popcount(side_a) != i) return std::nullopt;

  PairingConfig pairing;
  for (std::uint64_t a = side_a; a != 0; a &= a - 1) {
    const int ca = std::countr_zero(a);
    int partner = -1;
    for (std::uint64_t b = side_b; b != 0; b &= b - 1) {
      const int cb = std::countr_zero(b);
      if (f.value(x0.without(ca).with(cb)) != 0) {
        if (partner >= 0) return std::nullopt;
        partner = cb;
      }
    }
    if (partner < 0) return std::nullopt;
    pairing.pairs.emplace_back(std::min(ca, partner), std::max(ca, partner));
  }
  std::sort(pairing.pairs.begin(), pairing.pairs.end());
  for (std::size_t k = 1; k < pairing.pairs.size(); ++k) {
    if (pairing.pairs[k].first == pairing.pairs[k - 1].first) return std::nullopt;
  }
  try {
    pairing.validate(p.n);
  } catch (const Error&) {
    return std::nullopt;
  }

  SparseFunction g = build_canonical(p, i, pairing);
  BigRational scalar = f.begin()->second / g.value(x0);
  if (scalar < 0 && !pairing.pairs.empty()) {
    std::swap(pairing.pairs.front().first, pairing.pairs.front().second);
    g *= BigRational(-1);
    scalar = -scalar;
  }
  g *= scalar;
  if (!(g == f)) return std::nullopt;
  return CanonicalMatch{std::move(pairing), std::move(scalar)};
}

}  // namespace

std::optional<CanonicalMatch> match_canonical(const SparseFunction& f, int i) {
  const JohnsonParams& p = f.params();
  if (f.is_zero() || i < 0 || i > p.w || p.w - i > p.n - 2 * i) return std::nullopt;
  if (BigInteger(static_cast<unsigned long>(f.support_size())) != support_size_bound(p.n, p.w, i)) return std::nullopt;
  if (i == 0) return match_on(f, 0, {});

  std::vector<int> singletons;
  for (const auto& block : coordinate_partition(f).blocks) {
    if (block.size() == 1) singletons.push_back(block.front());
  }
  const auto want = static_cast<std::size_t>(2 * i);
  if (singletons.size() == want) return match_on(f, i, singletons);
  if (singletons.size() == want + 1) {
    // n - 2i = 1: the unpaired coordinate is a singleton block as well.
    for (std::size_t skip = 0; skip < singletons.size(); ++skip) {
      std::vector<int> coords;
      for (std::size_t k = 0; k < singletons.size(); ++k) {
        if (k != skip) coords.push_back(singletons[k]);
      }
      if (auto m = match_on(f, i, coords)) return m;
    }
  }
  return std::nullopt;
}

}  // namespace jsup
