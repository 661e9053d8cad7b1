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

#include <random>

#include "oracles.hpp"
#include "zdsolve/errors.hpp"
#include "zdsolve/numerics.hpp"

using namespace zds;

namespace {

Dyadic dy(long m, std::int64_t e = 0) { return Dyadic(Integer(m), e); }

DyadicInterval iv(long lo, long hi) { return {Dyadic(lo), Dyadic(hi)}; }

Dyadic random_dyadic(std::mt19937_64& rng) {
  return Dyadic(oracle::uniform(rng, -1000, 1000), oracle::uniform(rng, -8, 4)
                                                       .get_si());
}

DyadicInterval random_interval(std::mt19937_64& rng) {
  Dyadic a = random_dyadic(rng);
  Dyadic b = random_dyadic(rng);
  return {std::min(a, b), std::max(a, b)};
}

// Point inside [lo, hi] on a grid fine enough to hit interior values.
Rational sample(std::mt19937_64& rng, const DyadicInterval& x) {
  Rational t(oracle::uniform(rng, 0, 64), 64);
  return x.lo().to_rational() + t * (x.hi() - x.lo()).to_rational();
}

bool encloses(const DyadicInterval& x, const Rational& v) {
  return x.lo().to_rational() <= v && v <= x.hi().to_rational();
}

}  // namespace

TEST_CASE("dyadic canonical form") {
  Dyadic a(Integer(12), 3);
  CHECK(a.mantissa() == 3);
  CHECK(a.exponent() == 5);
  Dyadic z(Integer(0), 17);
  CHECK(z.exponent() == 0);
  CHECK(z.is_zero());
  // normalizing twice is idempotent
  Dyadic b(a.mantissa(), a.exponent());
  CHECK(b == a);
  CHECK(Dyadic(Integer(-40), -2) == dy(-5, 1));
}

TEST_CASE("dyadic arithmetic and ordering") {
  CHECK(dy(3, -1) + dy(1, -1) == Dyadic(2));
  CHECK(dy(3, -2) * dy(4) == Dyadic(3));
  CHECK(dy(1, -3) < dy(1, -2));
  CHECK(dy(-1, -3) > dy(-1, -2));
  CHECK(Dyadic(-7) < Dyadic(0));
  CHECK(dy(5, 0).floor_log2() == 2);
  CHECK(dy(1, -4).floor_log2() == -4);
  CHECK((dy(3, -1) - Dyadic(2)).to_rational() == Rational(-1, 2));
}

TEST_CASE("dyadic rounding") {
  Rational third(1, 3);
  Dyadic lo = Dyadic::round_down(third, 10);
  Dyadic hi = Dyadic::round_up(third, 10);
  CHECK(lo.to_rational() <= third);
  CHECK(hi.to_rational() >= third);
  CHECK((hi - lo) == dy(1, -10));
  CHECK(Dyadic::round_nearest(Rational(5, 2), 0) == Dyadic(3));
  CHECK(Dyadic::round_down(Rational(-1, 3), 2) == dy(-1, -1));
  CHECK(dy(7, -3).round_down(1) == dy(1, -1));
  CHECK(dy(7, -3).round_up(1) == Dyadic(1));
  CHECK(dy(7, -3).round_nearest(1) == Dyadic(1));
}

TEST_CASE("dyadic serialization round-trips") {
  for (Dyadic d : {dy(0), dy(3, -7), dy(-5, 12), Dyadic(Integer("123456789012345678901"), -40)}) {
    CHECK(Dyadic::parse(d.to_string()) == d);
  }
  CHECK(dy(3, -2).to_string() == "3*2^-2");
  CHECK_THROWS_AS(Dyadic::parse("17"), PreconditionError);
}

TEST_CASE("division and square roots bracket the exact value") {
  Dyadic a(10);
  Dyadic b(3);
  Rational exact(10, 3);
  CHECK(div_down(a, b, 20).to_rational() <= exact);
  CHECK(div_up(a, b, 20).to_rational() >= exact);
  CHECK((div_up(a, b, 20) - div_down(a, b, 20)) <= dy(1, -20));
  Dyadic two(2);
  Dyadic lo = sqrt_down(two, 30);
  Dyadic hi = sqrt_up(two, 30);
  CHECK((lo * lo) <= two);
  CHECK((hi * hi) >= two);
  CHECK((hi - lo) <= dy(1, -30));
  CHECK(sqrt_down(Dyadic(16), 5) == Dyadic(4));
  CHECK(sqrt_up(Dyadic(16), 5) == Dyadic(4));
}

TEST_CASE("interval operation examples") {
  CHECK(interval_add(iv(1, 1), iv(2, 2)) == iv(3, 3));
  CHECK(interval_mul(iv(0, 1), iv(0, 1)) == iv(0, 1));
  CHECK(interval_mul(iv(-1, 1), iv(-1, 1)) == iv(-1, 1));
  CHECK(interval_neg(iv(-1, 2)) == iv(-2, 1));
  CHECK(iv(-2, 3).sqr() == iv(0, 9));
  CHECK_THROWS_AS(DyadicInterval(Dyadic(2), Dyadic(1)), PreconditionError);
}

TEST_CASE("interval enclosure under random point sampling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    DyadicInterval a = random_interval(rng);
    DyadicInterval b = random_interval(rng);
    DyadicInterval sum = interval_add(a, b);
    DyadicInterval prod = interval_mul(a, b);
    DyadicInterval neg = interval_neg(a);
    DyadicInterval rounded = prod.round_outward(3);
    for (int k = 0; k < 8; ++k) {
      Rational x = sample(rng, a);
      Rational y = sample(rng, b);
      REQUIRE(encloses(sum, x + y));
      REQUIRE(encloses(prod, x * y));
      REQUIRE(encloses(rounded, x * y));
      REQUIRE(encloses(neg, -x));
    }
  }
}

TEST_CASE("complex box arithmetic") {
  ComplexBox a = ComplexBox::point(Dyadic(1), Dyadic(2));
  ComplexBox b = ComplexBox::point(Dyadic(3), Dyadic(-1));
  ComplexBox p = a * b;  // (1+2i)(3-i) = 5+5i
  CHECK(p == ComplexBox::point(Dyadic(5), Dyadic(5)));
  ComplexBox q = divide(p, b, 40);
  CHECK(q.contains(Dyadic(1), Dyadic(2)));
  CHECK(q.half_width() < dy(1, -30));
  CHECK_THROWS_AS(divide(a, ComplexBox::centered(Dyadic(0), Dyadic(0),
                                                 dy(1, -3)),
                         10),
                  PreconditionError);
}

TEST_CASE("abs_interval examples") {
  ComplexBox z = ComplexBox::centered(Dyadic(3), Dyadic(4), dy(1, -40));
  DyadicInterval m = abs_interval(z, 10);
  CHECK(m.contains(Dyadic(5)));
  CHECK(m.width() < dy(1, -10));

  DyadicInterval zero = abs_interval(ComplexBox::point(Dyadic(0)), 4);
  CHECK(zero.lo() >= Dyadic(0));
  CHECK(zero.hi() < dy(1, -4));

  DyadicInterval one = abs_interval(ComplexBox::point(Dyadic(1)), 20);
  CHECK(one.contains(Dyadic(1)));
  CHECK(one.width() < dy(1, -20));
}

TEST_CASE("abs_interval refines through the callback or signals") {
  ComplexBox wide = ComplexBox::centered(Dyadic(3), Dyadic(4), dy(1, -2));
  CHECK_THROWS_AS(abs_interval(wide, 10), CertificationError);
  int calls = 0;
  auto refine = [&](std::int64_t q) {
    ++calls;
    return ComplexBox::centered(Dyadic(3), Dyadic(4), dy(1, -q - 1));
  };
  DyadicInterval m = abs_interval(wide, 10, refine);
  CHECK(calls >= 1);
  CHECK(m.contains(Dyadic(5)));
  CHECK(m.width() < dy(1, -10));
}

TEST_CASE("abs_interval width contract on random boxes") {
  std::mt19937_64 rng(11);
  for (std::int64_t rho : {4, 16, 64}) {
    for (int trial = 0; trial < 1000; ++trial) {
      Dyadic re(oracle::uniform(rng, -1 << 20, 1 << 20), -10);
      Dyadic im(oracle::uniform(rng, -1 << 20, 1 << 20), -10);
      auto at = [&](std::int64_t q) {
        return ComplexBox::centered(re, im, dy(1, -q - 2));
      };
      DyadicInterval m = abs_interval(at(2), rho, at);
      REQUIRE(m.width() < dy(1, -rho));
      // |z|^2 lies between lo^2 and hi^2
      Dyadic sq = re * re + im * im;
      REQUIRE(m.lo() * m.lo() <= sq);
      REQUIRE(m.hi() * m.hi() >= sq);
    }
  }
}

TEST_CASE("bit_magnitude examples") {
  CHECK(bit_magnitude(Dyadic(1)).value == 0);
  CHECK(bit_magnitude(Dyadic(8)).value == 3);
  CHECK(bit_magnitude(dy(1, -2)).value == 2);
  CHECK(bit_magnitude(Dyadic(5)).value == 3);
  CHECK(bit_magnitude(dy(3, -3)).value == 2);  // 3/8: log(8/3) -> 2
  CHECK(bit_magnitude(DyadicInterval(dy(1, -2), Dyadic(8))).value == 3);
  CHECK_THROWS_AS(bit_magnitude(Dyadic(0)), PreconditionError);
  CHECK_THROWS_AS(bit_magnitude(iv(0, 2)), PreconditionError);
}

TEST_CASE("integer helpers") {
  CHECK(ceil_log2(Integer(1)) == 0);
  CHECK(ceil_log2(Integer(5)) == 3);
  CHECK(ceil_log2(Integer(8)) == 3);
  CHECK(ceil_log2(Rational(3, 2)) == 1);
  CHECK(next_pow2(Integer(17)) == 32);
  CHECK(bit_length(Integer(-8)) == 4);
}
