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
#include "zdsolve/slf.hpp"

using namespace zds;

namespace {

bool injective(const std::vector<std::vector<Rational>>& pts,
               const std::vector<Integer>& c) {
  return oracle::distinct_projections(pts, c) == pts.size();
}

void check_recursion(const SlfTree& t) {
  for (const auto& node : t.nodes) {
    if (node.is_leaf()) {
      CHECK(node.form == LinearForm::coordinate(node.lo, t.num_vars));
      continue;
    }
    const SlfNode& a = t.nodes[*node.left];
    const SlfNode& b = t.nodes[*node.right];
    CHECK(a.lo == node.lo);
    CHECK(b.hi == node.hi);
    CHECK(a.hi == b.lo);
    for (std::size_t i = 0; i < t.num_vars; ++i) {
      CHECK(node.form.coefficients()[i] ==
            a.form.coefficients()[i] + node.s * b.form.coefficients()[i]);
    }
    CHECK(node.form.coefficients()[node.lo] == 1);
  }
}

}  // namespace

TEST_CASE("two-variable grid") {
  EliminationOracle o(parse_system("x1^2 - x1\nx2^2 - x2"));
  SlfTree t = build_slf_tree(o, 0);
  CHECK(o.calls() == 3);
  CHECK(t.oracle_calls == 3);
  const auto& c = t.root_node().form.coefficients();
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 1);
  CHECK(abs(c[1]) > 1);
  std::vector<std::vector<Rational>> pts = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(injective(pts, c));
  check_recursion(t);
  CHECK(t.max_coefficient() <= t.stated_bound);
  CHECK(t.max_coefficient() <= t.derived_bound);
}

TEST_CASE("one variable is a single leaf") {
  EliminationOracle o(parse_system("x1^2 - 2"));
  SlfTree t = build_slf_tree(o, 0);
  CHECK(o.calls() == 1);
  CHECK(t.nodes.size() == 1);
  CHECK(t.root_node().is_leaf());
  CHECK(t.root_node().roots.size() == 2);
}

TEST_CASE("four variables use seven oracle calls") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2; ++trial) {
    auto known = oracle::grid_system(rng, 4, 2, trial == 1, 4);
    EliminationOracle o(known.system);
    SlfTree t = build_slf_tree(o, 1);
    CHECK(o.calls() == 7);
    CHECK(t.nodes.size() == 7);
    CHECK(t.root_node().level == 2);
    check_recursion(t);
    CHECK(injective(known.solutions, t.root_node().form.coefficients()));
    CHECK(t.max_coefficient() <= t.stated_bound);
    CHECK(t.max_coefficient() <= t.derived_bound);
  }
}

TEST_CASE("three variables split as two and one") {
  std::mt19937_64 rng(23);
  auto known = oracle::grid_system(rng, 3, 2, true, 4);
  EliminationOracle o(known.system);
  SlfTree t = build_slf_tree(o, 2);
  CHECK(o.calls() == 5);
  const SlfNode& root = t.root_node();
  CHECK(t.nodes[*root.left].hi - t.nodes[*root.left].lo == 2);
  CHECK(t.nodes[*root.right].hi - t.nodes[*root.right].lo == 1);
  check_recursion(t);
  CHECK(injective(known.solutions, root.form.coefficients()));
}

TEST_CASE("same seed, same tree") {
  std::mt19937_64 rng(5);
  auto known = oracle::grid_system(rng, 2, 3, true, 5);
  EliminationOracle a(known.system);
  EliminationOracle b(known.system);
  CHECK(build_slf_tree(a, 9).root_node().form == build_slf_tree(b, 9).root_node().form);
}

TEST_CASE("family block on the two-variable grid") {
  PolynomialSystem s = parse_system("x1^2 - x1\nx2^2 - x2");
  EliminationOracle o(s);
  SlfFamily fam = build_slf_family(o, 0);
  CHECK(o.calls() == 2);
  CHECK(fam.block_length == 9);
  auto block = fam.block();
  REQUIRE(block.size() == 9);
  std::vector<std::vector<Rational>> pts = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  // 2nd * d^(4n)
  Integer cap = 2 * 2 * 2 * Integer(256);
  for (const auto& v : block) {
    CHECK(injective(pts, fam.form.at(v).coefficients()));
    CHECK(v >= 1);
    CHECK(v <= cap);
  }
}

TEST_CASE("family of one variable") {
  EliminationOracle o(parse_system("x1^3 - x1"));
  SlfFamily fam = build_slf_family(o, 0);
  CHECK(fam.form.at(5) == LinearForm::coordinate(0, 1));
  StrongSlf strong = select_strong_slf(fam, o, 0);
  CHECK(strong.elimination.strong == Strongness::kCertifiedStrong);
  CHECK(strong.elimination.polynomial == parse_univariate("x^3 - x"));
}

TEST_CASE("strong selection on circle and line") {
  EliminationOracle o(parse_system("x1^2 + x2^2 - 1\nx1 - x2"));
  SlfFamily fam = build_slf_family(o, 3);
  StrongSlf strong = select_strong_slf(fam, o, 3);
  CHECK(strong.elimination.strong == Strongness::kCertifiedStrong);
  REQUIRE(strong.elimination.shear_lambda.has_value());
  CHECK(strong.form == fam.form.at(*strong.elimination.shear_lambda));
  CHECK(squarefree_part(strong.elimination.polynomial).degree() == 2);
  CHECK(strong.tree.root_node().roots.size() == 2);
  CHECK(strong.tree.oracle_calls == 3);
}

TEST_CASE("strong root count equals the solution count") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto known = oracle::grid_system(rng, n, 2, true, 5, 2);
    EliminationOracle o(known.system);
    SlfFamily fam = build_slf_family(o, trial);
    StrongSlf strong = select_strong_slf(fam, o, trial);
    CHECK(squarefree_part(strong.elimination.polynomial).degree() ==
          static_cast<std::int64_t>(known.solutions.size()));
    CHECK(injective(known.solutions, strong.form.coefficients()));
  }
}

TEST_CASE("strong selection rejects solutions at infinity") {
  EliminationOracle o(parse_system("x1*x2 - 1\nx2 - 1"));
  SlfFamily fam = build_slf_family(o, 0);
  CHECK_THROWS_AS(select_strong_slf(fam, o, 0), PreconditionError);
}

TEST_CASE("positive-dimensional input propagates") {
  EliminationOracle o(parse_system("vars 2\nx1 - 1\nx1 - 1"));
  CHECK_THROWS_AS(build_slf_tree(o, 0), PositiveDimensionalError);
}

TEST_CASE("seeds split per node") {
  CHECK(split_seed(0, 0) != split_seed(0, 1));
  CHECK(split_seed(1, 0) != split_seed(0, 0));
  CHECK(split_seed(7, 3) == split_seed(7, 3));
}
