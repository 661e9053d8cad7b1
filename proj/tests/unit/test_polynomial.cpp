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
#include "zdsolve/polynomial.hpp"

using namespace zds;

namespace {

MultiPoly P(const std::string& s, std::size_t n = 0) {
  return parse_polynomial(s, n);
}

UniPoly U(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("multiply examples") {
  CHECK(to_string(P("x1 + x2") * P("x1 - x2")) == "x1^2 - x2^2");
  CHECK((P("0", 2) * P("x1 + x2")).is_zero());
  MultiPoly c = MultiPoly::constant(1, 1);
  for (int i = 0; i < 3; ++i) c = c * P("x1 + 1");
  CHECK(c.to_univariate() == U({1, 3, 3, 1}));
  CHECK_THROWS_AS(multiply(P("x1"), P("x2")), PreconditionError);
}

TEST_CASE("Kronecker multiply agrees with naive sparse convolution") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + trial % 4;
    int d = 1 + trial % 6;
    int bits = 1 + trial % 16;
    MultiPoly a = oracle::random_multipoly(rng, n, d, bits, 2 + trial % 12);
    MultiPoly b = oracle::random_multipoly(rng, n, d, bits, 2 + trial % 9);
    REQUIRE(multiply_kronecker(a, b) == multiply_sparse(a, b));
    REQUIRE(multiply(a, b) == multiply_sparse(a, b));
  }
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly a = oracle::random_unipoly(rng, 1 + trial % 40, 1 + trial % 60);
    UniPoly b = oracle::random_unipoly(rng, 1 + trial % 33, 1 + trial % 50);
    REQUIRE(multiply_kronecker(a, b) == oracle::naive_multiply(a, b));
  }
}

TEST_CASE("shear examples") {
  auto l12 = LinearForm::from_coefficients({1, 2});
  CHECK(to_string(shear(P("x1", 2), l12)) == "x1 - 2*x2");
  auto l11 = LinearForm::from_coefficients({1, 1});
  CHECK(to_string(shear(P("x1^2", 2), l11)) == "x1^2 - 2*x1*x2 + x2^2");
  CHECK(shear(P("x2", 2), l12) == P("x2", 2));
}

TEST_CASE("shear followed by the inverse shear is the identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 3;
    MultiPoly f = oracle::random_multipoly(rng, n, 4, 8, 6);
    std::vector<Integer> c(n);
    for (auto& x : c) x = oracle::uniform(rng, -5, 5);
    std::size_t pivot = trial % n;
    c[pivot] = 1;
    LinearForm l(c, pivot);
    REQUIRE(unshear(shear(f, l), l) == f);
  }
}

TEST_CASE("homogenize and restrict_to_infinity") {
  CHECK(to_string(homogenize(P("x1 + 1"), 1)) == "x1 + x2");
  MultiPoly F = homogenize(P("x1^2 + x2 - 1"), 2);
  CHECK(to_string(F) == "x1^2 + x2*x3 - x3^2");
  CHECK(homogenize(P("x1^2 + x1*x2"), 2) == P("x1^2 + x1*x2", 3));
  CHECK_THROWS_AS(homogenize(P("x1^3"), 2), PreconditionError);
  CHECK(to_string(restrict_to_infinity(F)) == "x1^2");
  CHECK(restrict_to_infinity(P("x1^2 + x2^2", 3)) == P("x1^2 + x2^2", 2));
  CHECK(restrict_to_infinity(P("x3^4", 3)).is_zero());
}

TEST_CASE("homogenize then specialize to 1 is the identity") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 4;
    MultiPoly f = oracle::random_multipoly(rng, n, 5, 10, 7);
    if (f.is_zero()) continue;
    MultiPoly F = homogenize(f, f.total_degree());
    REQUIRE(F.is_homogeneous());
    REQUIRE(F.specialize(n, Integer(1)) == f);
  }
}

TEST_CASE("squarefree_part examples") {
  CHECK(squarefree_part(U({1, -2, 1})) == U({-1, 1}));
  CHECK(squarefree_part(U({1, 0, 1})) == U({1, 0, 1}));
  CHECK(squarefree_part(U({0, 0, -1, 1})) == U({0, -1, 1}));
  CHECK_THROWS_AS(squarefree_part(UniPoly()), PreconditionError);
}

TEST_CASE("squarefree part is coprime to its derivative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly a = oracle::random_unipoly(rng, 1 + trial % 4, 6);
    UniPoly b = oracle::random_unipoly(rng, 1 + trial % 3, 6);
    UniPoly f = a * a * a * b;
    UniPoly s = squarefree_part(f);
    REQUIRE(gcd(s, s.derivative()).degree() == 0);
    REQUIRE(s.degree() <= a.degree() + b.degree());
  }
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
  UniPoly x1 = U({-1, 1});
  UniPoly x2 = U({2, 1});
  UniPoly q = U({1, 0, 1});
  UniPoly f = 3 * (x1 * x1 * x1 * x2 * q * q);
  auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == x2);
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == q);
  CHECK(dec[2].second == 3);
  CHECK(dec[2].first == x1);
}

TEST_CASE("gcd against constructed common factors") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly g = oracle::random_unipoly(rng, 1 + trial % 4, 8).normalized();
    UniPoly a = oracle::random_unipoly(rng, 1 + trial % 5, 8);
    UniPoly b = oracle::random_unipoly(rng, 1 + trial % 3, 8);
    UniPoly h = gcd(a * g, b * g);
    // g divides h, and h / g is gcd(a, b) up to unit
    UniPoly rest = exact_divide(h, g);
    REQUIRE(rest.normalized() == gcd(a, b));
  }
}

TEST_CASE("eval_interval examples") {
  std::vector<ComplexBox> one = {ComplexBox::point(Dyadic(1))};
  CHECK(eval_interval(P("x1"), one).contains(Dyadic(1), Dyadic(0)));
  std::vector<ComplexBox> pt = {ComplexBox::point(Dyadic(1)),
                                ComplexBox::point(Dyadic(0))};
  CHECK(eval_interval(P("x1^2 + x2^2 - 1"), pt).contains_zero());
  DyadicInterval unit(Dyadic(0), Dyadic(1));
  std::vector<ComplexBox> sq = {ComplexBox(unit, DyadicInterval()),
                                ComplexBox(unit, DyadicInterval())};
  ComplexBox r = eval_interval(P("x1*x2"), sq);
  CHECK(r.re().lo() <= Dyadic(0));
  CHECK(r.re().hi() >= Dyadic(1));
}

TEST_CASE("text round-trip") {
  CHECK(to_string(P("3*x1^2*x2 - 4*x2 + 1")) == "3*x1^2*x2 - 4*x2 + 1");
  CHECK(to_string(P("1 - x^2")) == "-x1^2 + 1");
  CHECK(to_string(P("x2*x1*2 + x1*x2")) == "3*x1*x2");
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    std::vector<MultiPoly> polys;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly f = oracle::random_multipoly(rng, n, 6, 40, 8);
      if (f.is_zero()) f = MultiPoly::constant(n, 1);
      polys.push_back(f);
    }
    PolynomialSystem s(polys);
    std::string text = to_string(s);
    PolynomialSystem back = parse_system(text);
    REQUIRE(back == s);
    REQUIRE(to_string(back) == text);
  }
}

TEST_CASE("system parsing") {
  PolynomialSystem s = parse_system("x1^2 + x2^2 - 1\nx1 - x2\n");
  CHECK(s.num_vars() == 2);
  CHECK(s.degrees() == std::vector<std::int64_t>{2, 1});
  CHECK(s.bezout_bound() == 2);
  PolynomialSystem c = parse_system("# comment\nvars 2\n\nx1 - 1 # tail\nx2\n");
  CHECK(c.num_vars() == 2);
  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_system("vars 2\n3*x1*x2 - 4\n"), PreconditionError);
  try {
    parse_system("x1 + 1\nx2 +* 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_system("vars 1\nx2\n"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2 x1"), ParseError);
}

TEST_CASE("univariate parsing") {
  CHECK(parse_univariate("x^2 - 2") == U({-2, 0, 1}));
  CHECK(parse_univariate("x1^3 - x1\n") == U({0, -1, 0, 1}));
  CHECK_THROWS_AS(parse_univariate("x1*x2"), ParseError);
}

TEST_CASE("bounds and helpers") {
  CHECK(U({1, -2, 1}).magnitude() == Magnitude{2, 2});
  CHECK(UniPoly::linear_root(Rational(3, 2)) == U({-3, 2}));
  auto qr = pseudo_divide(U({1, 0, 1}), U({1, 2}));
  // 4*(x^2+1) = (2x - 1)(2x + 1) + 5
  CHECK(qr.first == U({-1, 2}));
  CHECK(qr.second == U({5}));
  CHECK_THROWS_AS(exact_divide(U({1, 0, 1}), U({1, 1})), PreconditionError);
  CHECK(LinearForm::combine(LinearForm::from_coefficients({1, 0, 0}), 5,
                            LinearForm::from_coefficients({0, 1, 3}))
            .coefficients() == std::vector<Integer>{1, 5, 15});
}
