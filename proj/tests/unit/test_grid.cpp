// Copyright 2026 The zdsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zdsolve/errors.hpp"
#include "zdsolve/grid.hpp"

using namespace zds;

namespace {

std::vector<Rational> Q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

RootSet roots_of(const std::vector<Rational>& r, std::int64_t quality = 16) {
  return isolate(oracle::from_roots(r), quality);
}

Dyadic dy(long m, std::int64_t e = 0) { return Dyadic(Integer(m), e); }

bool in_box(const ComplexBox& b, const Rational& v) {
  return b.re().lo().to_rational() <= v && v <= b.re().hi().to_rational() &&
         b.im().contains_zero();
}

// Index of the root box holding the rational v.
std::size_t locate(const RootSet& rs, const Rational& v) {
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (in_box(rs.box(i), v)) return i;
  }
  FAIL("rational root not found");
  return 0;
}

}  // namespace

TEST_CASE("difference table examples") {
  RootSet a = roots_of(Q({0, 1}));
  auto [n1, d1] = build_diff_tables(a, a, 1);
  REQUIRE(n1.entries.size() == 1);
  CHECK(abs(n1.entries[0].approx.to_rational() - 1) < Rational(1, 64));

  RootSet b = roots_of(Q({0, 1, 3}));
  auto [n2, d2] = build_diff_tables(b, b, 1);
  REQUIRE(n2.sorted);
  REQUIRE(n2.entries.size() == 3);
  for (int k = 0; k < 3; ++k) {
    Rational exact(k + 1);
    Rational err = abs(n2.entries[k].approx.to_rational() - exact);
    CHECK(err < exact / (Integer(1) << static_cast<unsigned>(n2.quality)));
  }

  RootSet one = roots_of(Q({5}));
  auto [n3, d3] = build_diff_tables(one, b, 1);
  CHECK(n3.entries.empty());
  CHECK(d3.entries.size() == 3);
}

TEST_CASE("difference tables reach the relative quality on random data") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = oracle::random_rationals(rng, 2 + trial % 6, 1000, 50);
    RootSet rs = roots_of(r, 4);
    DiffTable t = build_diff_table(rs, 20);
    REQUIRE(t.entries.size() == r.size() * (r.size() - 1) / 2);
    for (const auto& e : t.entries) {
      // recover the exact distance from the box contents
      std::size_t hit_i = 0;
      std::size_t hit_j = 0;
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (in_box(rs.box(e.i), r[k])) hit_i = k;
        if (in_box(rs.box(e.j), r[k])) hit_j = k;
      }
      Rational exact = abs(r[hit_i] - r[hit_j]);
      Rational err = abs(e.approx.to_rational() - exact);
      REQUIRE(err < exact / (1 << 20));
      REQUIRE(err <= 1);
    }
  }
}

TEST_CASE("galloping merge sort") {
  std::vector<int> sorted_in{1, 2, 3, 4, 5, 6, 7, 8};
  auto copy = sorted_in;
  gallop_merge_sort(copy, std::less<int>());
  CHECK(copy == sorted_in);

  std::vector<int> rev(16);
  for (int k = 0; k < 16; ++k) rev[k] = 16 - k;
  MergeStats st;
  gallop_merge_sort(rev, std::less<int>(), &st);
  CHECK(std::is_sorted(rev.begin(), rev.end()));
  for (auto m : st.level_max_per_element) CHECK(m <= 2 * 4);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> v(1 + trial * 7);
    for (auto& x : v) x = static_cast<int>(rng() % 20);
    auto expect = v;
    std::stable_sort(expect.begin(), expect.end());
    gallop_merge_sort(v, std::less<int>());
    REQUIRE(v == expect);
  }

  // stability: equal keys keep input order
  std::vector<std::pair<int, int>> p{{1, 0}, {0, 1}, {1, 2}, {0, 3}, {1, 4}};
  gallop_merge_sort(p, [](const auto& a, const auto& b) { return a.first < b.first; });
  CHECK(p == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 0}, {1, 2}, {1, 4}});
}

TEST_CASE("two-block input costs logarithmically at the boundary") {
  for (int k = 4; k <= 14; ++k) {
    std::size_t n = std::size_t{1} << k;
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
    MergeStats st;
    gallop_merge_sort(v, std::less<int>(), &st);
    CHECK(st.top_boundary <= static_cast<std::uint64_t>(2 * k + 2));
    CHECK(st.level_total[0] <= static_cast<std::uint64_t>(2 * k + 2));
    // a classical merge would compare the lower maximum n/2 times
    CHECK(st.level_total[0] < n / 2);
  }
}

TEST_CASE("round_fraction examples") {
  Integer range = Integer(1) << 20;
  CHECK(round_fraction(Dyadic(5), Dyadic(1), range) == RoundedFraction{false, 5});
  CHECK(round_fraction(dy(1, -40), Dyadic(1), range) == RoundedFraction{false, 0});
  CHECK(round_fraction(Dyadic(Integer(1) << 30), Dyadic(1), range).infinite);
  // ties go down: 5/2 -> 2, 7/2 -> 3
  CHECK(round_fraction(Dyadic(5), Dyadic(2), range).value == 2);
  CHECK(round_fraction(Dyadic(7), Dyadic(2), range).value == 3);
  // monotone in nu
  RoundedFraction prev{false, 0};
  for (int m = 1; m < 400; ++m) {
    RoundedFraction r = round_fraction(dy(m, -3), Dyadic(3), Integer(4));
    if (prev.infinite) REQUIRE(r.infinite);
    if (!r.infinite && !prev.infinite) REQUIRE(r.value >= prev.value);
    prev = r;
  }
}

TEST_CASE("exact integer ratios survive approximation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    // X has a pair at distance k*delta, Y a pair at distance delta
    Integer delta = oracle::uniform(rng, 1, 9);
    Integer k = oracle::uniform(rng, 1, 40);
    Rational x0(oracle::uniform(rng, -20, 20), 3);
    Rational y0(oracle::uniform(rng, -20, 20), 7);
    Rational dd(delta, 7);
    std::vector<Rational> xs{x0, x0 + k * dd};
    std::vector<Rational> ys{y0, y0 + dd};
    RootSet X = isolate(oracle::from_roots(xs), 4);
    RootSet Y = isolate(oracle::from_roots(ys), 4);
    auto [nu, de] = build_diff_tables(X, Y, 1);
    GridParams p = grid_params(X, Y, 1);
    RoundedFraction r = round_fraction(nu.entries[0].approx,
                                       de.entries[0].approx, p.range);
    if (k <= 2 * p.range) {
      REQUIRE_FALSE(r.infinite);
      REQUIRE(r.value == k);
    }
  }
}

TEST_CASE("preimage_count examples") {
  RootSet x = roots_of(Q({0, 1, 2}));
  RootSet y = roots_of(Q({0, 1}));
  auto [nu, de] = build_diff_tables(x, y, 1);
  Integer range = grid_params(x, y, 1).range;
  CHECK(preimage_count(nu, de, 1, 1, range) == 2);
  CHECK(preimage_count(nu, de, 2, 2, range) == 1);
  CHECK(preimage_count(nu, de, 3, range, range) == 0);
  CHECK_THROWS_AS(preimage_count(nu, de, 0, 2, range), PreconditionError);
  CHECK_THROWS_AS(preimage_count(nu, de, 1, range + 1, range), PreconditionError);
}

TEST_CASE("preimage_count agrees with brute force over exact fractions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    // integer roots keep every fraction away from half-integers or exact
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (long v : {0L, 1L}) xs.emplace_back(v);
    while (xs.size() < 4) {
      Rational v(oracle::uniform(rng, -30, 30));
      if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
    }
    // delta in {1, 3}: no fraction is an exact half-integer
    ys = {Rational(0), Rational(trial % 2 == 0 ? 1 : 3)};
    RootSet X = isolate(oracle::from_roots(xs), 4);
    RootSet Y = isolate(oracle::from_roots(ys), 4);
    auto [nu, de] = build_diff_tables(X, Y, 1);
    Integer range = grid_params(X, Y, 1).range;
    auto nd = oracle::pair_distances(xs);
    Rational delta = abs(ys[1] - ys[0]);
    for (long s = 1; s <= 30; ++s) {
      std::size_t brute = 0;
      for (const auto& n : nd) {
        Rational f = n / delta;
        // nearest integer, ties down
        Rational shifted = f - Rational(1, 2);
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(),
                   shifted.get_den_mpz_t());
        if (r == s) ++brute;
      }
      REQUIRE(preimage_count(nu, de, s, s, range) == brute);
    }
  }
}

TEST_CASE("find_separating_block examples") {
  RootSet pm1 = roots_of(Q({-1, 1}));
  SeparatingInterval a = find_separating_block(pm1, pm1, 1);
  CHECK(a.s_star != 1);
  CHECK(oracle::injective_on_grid(Q({-1, 1}), Q({-1, 1}), a.s_star));

  RootSet single = roots_of(Q({4}));
  CHECK(find_separating_block(single, pm1, 1).s_star == 1);
  CHECK(find_separating_block(pm1, single, 3).s_star == 1);

  RootSet x = roots_of(Q({0, 1}));
  RootSet y = roots_of(Q({0, 6}));
  SeparatingInterval b = find_separating_block(x, y, 1);
  CHECK(oracle::quarter_slack_holds(Q({0, 1}), Q({0, 6}), b.s_star));

  CHECK_THROWS_AS(find_separating_block(x, y, Integer(1) << 9), PreconditionError);
}

TEST_CASE("separating blocks on random rational grids") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    auto xs = oracle::random_rationals(rng, 1 + trial % 5, 30, 3);
    auto ys = oracle::random_rationals(rng, 1 + (trial / 5) % 5, 30, 3);
    RootSet X = isolate(oracle::from_roots(xs), 8);
    RootSet Y = isolate(oracle::from_roots(ys), 8);
    Integer c = 1 + trial % 4;
    SeparatingInterval blk = find_separating_block(X, Y, c);
    REQUIRE(blk.s_star >= 1);
    REQUIRE(blk.s_star + c - 1 <= blk.search_range_max);
    for (Integer s = blk.s_star; s < blk.s_star + c; ++s) {
      REQUIRE(oracle::injective_on_grid(xs, ys, s));
      REQUIRE(oracle::quarter_slack_holds(xs, ys, s));
    }
    for (std::size_t l = 1; l < blk.level_counts.size(); ++l) {
      REQUIRE(blk.level_counts[l] * 2 <= blk.level_counts[l - 1]);
    }
  }
}

TEST_CASE("lift examples") {
  RootSet x = roots_of(Q({0, 1}));
  RootSet z = roots_of(Q({0, 1, 2, 3}));
  auto pairs = lift(z, x, x, 2, 20);
  REQUIRE(pairs.size() == 4);
  // z = x + 2y on {0,1}^2
  long expect_x[] = {0, 1, 0, 1};
  long expect_y[] = {0, 0, 1, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    std::size_t zi = locate(z, Rational(static_cast<long>(k)));
    CHECK(in_box(pairs[zi].x, Rational(expect_x[k])));
    CHECK(in_box(pairs[zi].y, Rational(expect_y[k])));
    CHECK(pairs[zi].x.half_width() < dy(1, -20));
  }

  RootSet zero = roots_of(Q({0}));
  auto p0 = lift(zero, zero, zero, 1, 8);
  REQUIRE(p0.size() == 1);
  CHECK(in_box(p0[0].x, 0));

  RootSet bad = roots_of(Q({0, 1, 2, 3, 5}));
  CHECK_THROWS_AS(lift(bad, x, x, 2, 20), NoPreimageError);
  try {
    lift(bad, x, x, 2, 20);
  } catch (const NoPreimageError& e) {
    CHECK(e.index() == locate(bad, 5));
  }
}

TEST_CASE("lift inverts the projection on random grids") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    auto xs = oracle::random_rationals(rng, 1 + trial % 4, 12, 2);
    auto ys = oracle::random_rationals(rng, 1 + (trial / 4) % 4, 12, 2);
    RootSet X = isolate(oracle::from_roots(xs), 8);
    RootSet Y = isolate(oracle::from_roots(ys), 8);
    Integer s = find_separating_block(X, Y, 1).s_star;
    std::vector<Rational> zs;
    for (const auto& a : xs) {
      for (const auto& b : ys) zs.push_back(a + s * b);
    }
    RootSet Z = isolate(oracle::from_roots(zs), 8);
    REQUIRE(Z.size() == zs.size());
    auto pairs = lift(Z, X, Y, s, 24);
    for (std::size_t i = 0; i < Z.size(); ++i) {
      // project back and compare with the original point
      ComplexBox proj = pairs[i].x + pairs[i].y.scale(DyadicInterval(Dyadic(s, 0)));
      REQUIRE(proj.intersects(Z.box(i)));
    }
    for (const auto& a : xs) {
      for (const auto& b : ys) {
        std::size_t zi = locate(Z, a + s * b);
        REQUIRE(in_box(pairs[zi].x, a));
        REQUIRE(in_box(pairs[zi].y, b));
      }
    }
  }
}
