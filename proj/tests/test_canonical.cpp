#include <doctest.h>

#include <random>

#include "jsup/canonical.hpp"
#include "jsup/error.hpp"
#include "jsup/spectral.hpp"
#include "oracles.hpp"

using namespace jsup;

namespace {
VertexSet v(std::initializer_list<int> e, int n) { return VertexSet::from_elements(e, n); }
PairingConfig pc(std::vector<std::pair<int, int>> p) { return PairingConfig{std::move(p)}; }
}  // namespace

TEST_CASE("f^{1,2,5} entries") {
  const auto f = build_canonical({5, 2}, 1, pc({{0, 1}}));
  CHECK(f.support_size() == 6);
  for (int c : {2, 3, 4}) {
    CHECK(f.value(v({0, c}, 5)) == -1);
    CHECK(f.value(v({1, c}, 5)) == 1);
  }
  CHECK(f.value(v({0, 1}, 5)) == 0);
}

TEST_CASE("small constructions") {
  const auto f = build_canonical({6, 3}, 3, default_pairing(3));
  CHECK(f.support_size() == 8);
  for (const auto& [x, val] : f) {
    const int hits = x.contains(0) + x.contains(2) + x.contains(4);
    CHECK(val == (hits % 2 ? -1 : 1));
  }
  CHECK(build_canonical({4, 2}, 0, pc({})) == SparseFunction::constant({4, 2}, 1));
}

TEST_CASE("bound formula") {
  CHECK(support_size_bound(5, 2, 1) == 6);
  CHECK(support_size_bound(6, 3, 3) == 8);
  CHECK(support_size_bound(8, 3, 2) == BigInteger(4 * oracle::pascal(4, 1)));
  CHECK(support_size_bound(3, 2, 2) == 0);
}

TEST_CASE("pairing parsing and validation") {
  CHECK(parse_pairing("0:1,2:3") == default_pairing(2));
  CHECK(parse_pairing("") == pc({}));
  CHECK(default_pairing(2).to_string() == "0:1,2:3");
  CHECK_THROWS_AS(parse_pairing("0-1"), Error);
  CHECK_THROWS_AS(parse_pairing("0:1,1:2"), Error);
  CHECK_THROWS_AS(pc({{0, 5}}).validate(5), Error);
  CHECK_THROWS_AS(build_canonical({5, 1}, 2, default_pairing(2)), Error);
  CHECK_THROWS_AS(build_canonical({5, 2}, 2, default_pairing(1)), Error);
}

TEST_CASE("construction agrees with the set-notation definition and is an eigenfunction") {
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 10; ++n) {
    for (int w = 0; w <= n; ++w) {
      for (int i = 0; i <= w; ++i) {
        if (w - i > n - 2 * i) continue;
        const auto pairs = oracle::random_pairing(rng, n, i);
        const auto f = build_canonical({n, w}, i, pc(pairs));
        CHECK(oracle::to_dense(f) == oracle::canonical(n, w, pairs));
        CHECK(is_eigenfunction(f, eigenvalue(n, w, i)).holds);
        CHECK(BigInteger(static_cast<unsigned long>(f.support_size())) == support_size_bound(n, w, i));
      }
    }
  }
}

TEST_CASE("swapping a pair negates") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const int i = 1 + static_cast<int>(rng() % std::min(3, n / 2));
    const int w = i + static_cast<int>(rng() % (n - 2 * i + 1));
    auto pairs = oracle::random_pairing(rng, n, i);
    const auto f = build_canonical({n, w}, i, pc(pairs));
    const std::size_t k = rng() % pairs.size();
    std::swap(pairs[k].first, pairs[k].second);
    CHECK(build_canonical({n, w}, i, pc(pairs)) == -f);
  }
}

TEST_CASE("match_canonical examples") {
  const auto f = build_canonical({5, 2}, 1, pc({{0, 1}}));
  auto m = match_canonical(make_rational(3) * f, 1);
  REQUIRE(m);
  CHECK(m->pairing == pc({{0, 1}}));
  CHECK(m->scalar == 3);

  m = match_canonical(-f, 1);
  REQUIRE(m);
  CHECK(m->pairing == pc({{1, 0}}));
  CHECK(m->scalar == 1);

  CHECK_FALSE(match_canonical(SparseFunction::constant({5, 2}, 1), 1));
  CHECK_FALSE(match_canonical(SparseFunction({5, 2}), 1));

  const auto g = build_canonical({8, 3}, 2, pc({{0, 2}, {1, 3}}));
  m = match_canonical(g, 2);
  REQUIRE(m);
  CHECK(m->scalar == 1);
  CHECK(build_canonical({8, 3}, 2, m->pairing) == g);
  CHECK(m->pairing == pc({{0, 2}, {1, 3}}));
}

TEST_CASE("match_canonical round trip on random pairings and scalars") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int i = static_cast<int>(rng() % (n / 2 + 1));
    const int w = i + static_cast<int>(rng() % (n - 2 * i + 1));
    const auto pairs = oracle::random_pairing(rng, n, i);
    BigRational s = oracle::small_rational(rng);
    if (s == 0) s = 1;
    const auto f = s * build_canonical({n, w}, i, pc(pairs));
    const auto m = match_canonical(f, i);
    REQUIRE(m);
    CHECK(m->scalar * build_canonical({n, w}, i, m->pairing) == f);
    // Normalized order: pairs sorted by their smaller coordinate.
    for (std::size_t k = 1; k < m->pairing.pairs.size(); ++k) {
      const auto [a0, b0] = m->pairing.pairs[k - 1];
      const auto [a1, b1] = m->pairing.pairs[k];
      CHECK(std::min(a0, b0) < std::min(a1, b1));
      CHECK(a1 < b1);
    }
    if (i > 0) CHECK(m->scalar > 0);
  }
}

TEST_CASE("match_canonical rejects eigenfunctions of other shapes") {
  const auto b = eigenspace_basis({6, 3}, 2);
  const auto f = b.column(0) + b.column(1);
  CHECK_FALSE(match_canonical(f, 2));
  CHECK_FALSE(match_canonical(build_canonical({6, 3}, 1, default_pairing(1)), 2));
}
