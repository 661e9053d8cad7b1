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

#include "zdsolve/slf.hpp"

#include <algorithm>
#include <utility>

#include "zdsolve/errors.hpp"

namespace zds {

namespace {

constexpr std::int64_t kRootQuality = 2;

struct Builder {
  EliminationOracle& oracle;
  std::uint64_t seed;
  SlfTree tree;
  Integer family_block;  // 0 unless the root is a family

  RootSet roots_of(const UniPoly& e) {
    return isolate(squarefree_part(e), kRootQuality);
  }

  void eliminate(SlfNode& node) {
    node.elimination = oracle(node.form, split_seed(seed, tree.nodes.size()));
    ++tree.oracle_calls;
    node.roots = roots_of(node.elimination->polynomial);
  }

  std::size_t build(std::size_t lo, std::size_t hi, bool is_root) {
    const std::size_t n = tree.num_vars;
    SlfNode node;
    node.lo = lo;
    node.hi = hi;
    if (hi - lo == 1) {
      node.form = LinearForm::coordinate(lo, n);
      eliminate(node);
    } else {
      // ceil / floor split
      std::size_t mid = lo + (hi - lo + 1) / 2;
      std::size_t l = build(lo, mid, false);
      std::size_t r = build(mid, hi, false);
      const SlfNode& a = tree.nodes[l];
      const SlfNode& b = tree.nodes[r];
      node.left = l;
      node.right = r;
      node.level = std::max(a.level, b.level) + 1;
      Integer c = is_root && family_block > 0 ? family_block : Integer(1);
      node.separation = find_separating_block(a.roots, b.roots, c);
      node.s = node.separation.s_star;
      node.form = LinearForm::combine(a.form, node.s, b.form);
      if (!(is_root && family_block > 0)) eliminate(node);
    }
    tree.nodes.push_back(std::move(node));
    return tree.nodes.size() - 1;
  }
};

Integer node_bound(const SlfTree& t, std::size_t k) {
  const SlfNode& node = t.nodes[k];
  if (node.is_leaf()) return 1;
  Integer a = node_bound(t, *node.left);
  Integer b = node.separation.search_range_max * node_bound(t, *node.right);
  return std::max(a, b);
}

SlfTree run(EliminationOracle& oracle, std::uint64_t seed,
            const Integer& family_block) {
  const PolynomialSystem& system = oracle.system();
  const std::size_t n = system.num_vars();
  if (n == 0 || system.size() != n) {
    throw PreconditionError("separating form needs a square system");
  }
  Builder b{oracle, seed, {}, family_block};
  b.tree.num_vars = n;
  for (auto d : system.degrees()) b.tree.degree = std::max(b.tree.degree, d);
  b.tree.root = b.build(0, n, true);
  std::int64_t depth = ceil_log2(Integer(static_cast<unsigned long>(n)));
  mpz_pow_ui(b.tree.stated_bound.get_mpz_t(), Integer(b.tree.degree).get_mpz_t(),
             static_cast<unsigned long>(4 * n * static_cast<std::size_t>(depth)));
  b.tree.derived_bound = node_bound(b.tree, b.tree.root);
  return std::move(b.tree);
}

}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Integer SlfTree::max_coefficient() const {
  Integer best = 0;
  for (const auto& node : nodes) {
    for (const auto& c : node.form.coefficients()) best = std::max(best, Integer(abs(c)));
  }
  return best;
}

SlfTree build_slf_tree(EliminationOracle& oracle, std::uint64_t rng_seed) {
  return run(oracle, rng_seed, 0);
}

std::vector<Integer> SlfFamily::block() const {
  std::vector<Integer> out;
  for (Integer k = 0; k < block_length; ++k) out.push_back(s_star + k);
  return out;
}

SlfFamily build_slf_family(EliminationOracle& oracle, std::uint64_t rng_seed,
                           const Integer& block_length) {
  const PolynomialSystem& system = oracle.system();
  std::int64_t d = 1;
  for (auto di : system.degrees()) d = std::max(d, di);
  SlfFamily out;
  out.block_length = 2 * Integer(static_cast<unsigned long>(system.num_vars())) * d + 1;
  if (block_length != 0) {
    if (block_length < out.block_length) {
      throw PreconditionError("family block must hold at least 2nd + 1 integers");
    }
    out.block_length = block_length;
  }
  out.tree = run(oracle, rng_seed, out.block_length);
  const SlfNode& root = out.tree.root_node();
  if (root.is_leaf()) {
    out.s_star = 1;
    out.form = {root.form.coefficients(),
                std::vector<Integer>(root.form.num_vars()), root.form.pivot()};
    return out;
  }
  out.s_star = root.s;
  out.form = {out.tree.nodes[*root.left].form.coefficients(),
              out.tree.nodes[*root.right].form.coefficients(),
              out.tree.nodes[*root.left].form.pivot()};
  return out;
}

StrongSlf select_strong_slf(const SlfFamily& family, EliminationOracle& oracle,
                            std::uint64_t rng_seed) {
  const PolynomialSystem& system = oracle.system();
  if (!check_no_infinity(system)) {
    throw PreconditionError("the system has a solution at infinity");
  }
  StrongSlf out;
  out.tree = family.tree;
  SlfNode& root = out.tree.nodes[out.tree.root];
  std::optional<Integer> lambda;
  if (root.is_leaf()) {
    out.form = root.form;
    out.elimination = root.elimination.value();
  } else {
    ShearChoice choice = choose_shear(system, family.form, family.block(),
                                      split_seed(rng_seed, out.tree.nodes.size()));
    lambda = choice.lambda_star;
    out.form = choice.form;
    out.elimination = oracle(out.form, split_seed(rng_seed, out.tree.nodes.size() + 1));
    ++out.tree.oracle_calls;
  }
  out.elimination.shear_lambda = lambda;
  out.elimination.strong = certify_strong(out.elimination, system);
  if (out.elimination.strong != Strongness::kCertifiedStrong) {
    throw CertificationError("selected form could not be certified strong");
  }
  root.form = out.form;
  if (lambda) root.s = *lambda;
  root.elimination = out.elimination;
  root.roots = isolate(squarefree_part(out.elimination.polynomial), kRootQuality);
  return out;
}

}  // namespace zds
