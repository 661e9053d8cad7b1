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

#include "zdsolve/solver.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <utility>

#include "zdsolve/errors.hpp"

namespace zds {

namespace {

constexpr std::size_t kMaxInfinityRounds = 128;
constexpr std::size_t kMaxSolveAttempts = 8;
constexpr std::int64_t kMaxQuality = 1 << 16;

Dyadic pow2(std::int64_t e) { return Dyadic(1).mul_2exp(e); }

void collect(const Reconstruction& r,
             const std::vector<std::map<std::size_t, std::size_t>>& where,
             const SlfTree& tree, std::size_t node, std::size_t root,
             std::vector<std::size_t>& out) {
  const SlfNode& nd = tree.nodes[node];
  if (nd.is_leaf()) {
    out[nd.lo] = root;
    return;
  }
  const ImagePoint& p = r.images[node].points[where[node].at(root)];
  collect(r, where, tree, *nd.left, *p.left, out);
  collect(r, where, tree, *nd.right, *p.right, out);
}

bool disjoint(const std::vector<ComplexBox>& a,
              const std::vector<ComplexBox>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].intersects(b[i])) return true;
  }
  return false;
}

}  // namespace

bool certify_box(const PolynomialSystem& system, const SolutionBox& box) {
  for (const auto& f : system.polys()) {
    if (!eval_interval(f, box.coordinates).contains_zero()) return false;
  }
  return true;
}

Reconstruction reconstruct(const SlfTree& tree, std::int64_t quality) {
  const std::size_t count = tree.nodes.size();
  Reconstruction out;
  out.images.resize(count);
  std::vector<std::unique_ptr<RootApproximator>> approx;
  for (const auto& node : tree.nodes) {
    approx.push_back(std::make_unique<RootApproximator>(node.roots));
  }
  std::vector<std::vector<std::size_t>> need(count);
  for (std::size_t i = 0; i < tree.root_node().roots.size(); ++i) {
    need[tree.root].push_back(i);
  }
  std::vector<std::map<std::size_t, std::size_t>> where(count);

  // children precede their parent in the node list
  for (std::size_t k = count; k-- > 0;) {
    const SlfNode& node = tree.nodes[k];
    LevelImage& image = out.images[k];
    image.level = node.level;
    image.node = k;
    auto& want = need[k];
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (node.is_leaf()) {
      for (std::size_t i : want) {
        where[k][i] = image.points.size();
        image.points.push_back({i, node.roots.box(i), {}, {}});
      }
      continue;
    }
    // z is an exact image, so a single surviving candidate is its preimage
    std::vector<LiftedPair> pairs =
        lift(*approx[k], want, *approx[*node.left], *approx[*node.right],
             node.s, 1);
    for (std::size_t t = 0; t < want.size(); ++t) {
      where[k][want[t]] = image.points.size();
      image.points.push_back(
          {want[t], node.roots.box(want[t]), pairs[t].x_index, pairs[t].y_index});
      need[*node.left].push_back(pairs[t].x_index);
      need[*node.right].push_back(pairs[t].y_index);
    }
  }

  const std::size_t n = tree.num_vars;
  out.leaf_roots.resize(n);
  std::vector<std::size_t> leaf_node(n);
  for (std::size_t k = 0; k < count; ++k) {
    if (tree.nodes[k].is_leaf()) {
      out.leaf_roots[tree.nodes[k].lo] = tree.nodes[k].roots;
      leaf_node[tree.nodes[k].lo] = k;
    }
  }
  for (const auto& p : out.images[tree.root].points) {
    std::vector<std::size_t> idx(n);
    collect(out, where, tree, tree.root, p.root, idx);
    SolutionBox box;
    box.quality = quality;
    for (std::size_t i = 0; i < n; ++i) {
      box.coordinates.push_back(approx[leaf_node[i]]->box(idx[i], quality));
    }
    out.points.push_back(std::move(idx));
    out.solutions.push_back(std::move(box));
  }
  return out;
}

bool InfinityTransform::is_identity() const {
  return std::all_of(lambdas.begin(), lambdas.end(),
                     [](const Integer& l) { return l == 0; });
}

PolynomialSystem apply_transform(const PolynomialSystem& system,
                                 const InfinityTransform& t) {
  const std::size_t n = system.num_vars();
  if (t.lambdas.size() != n) {
    throw PreconditionError("transform has the wrong number of variables");
  }
  if (t.is_identity()) return system;
  MultiPoly g = MultiPoly::variable(n + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    g = g + t.lambdas[j] * MultiPoly::variable(n + 1, j);
  }
  std::vector<MultiPoly> out;
  for (const auto& f : system.polys()) {
    MultiPoly F = homogenize(f, f.total_degree()).substitute(n, g);
    out.push_back(F.specialize(n, 1));
  }
  return PolynomialSystem(std::move(out));
}

InfinityRemoval remove_infinity(const PolynomialSystem& system,
                                std::uint64_t rng_seed, bool try_identity) {
  const std::size_t n = system.num_vars();
  if (n == 0 || system.size() != n) {
    throw PreconditionError("infinity removal needs a square system");
  }
  std::int64_t d = 1;
  for (auto di : system.degrees()) d = std::max(d, di);
  Integer top;
  mpz_ui_pow_ui(top.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(n));
  top *= 2;
  if (top > Integer("4611686018427387904")) top = Integer("4611686018427387904");
  const std::uint64_t span = top.get_ui() + 1;

  std::mt19937_64 rng(rng_seed);
  InfinityRemoval out;
  for (std::size_t round = 0; round < kMaxInfinityRounds; ++round) {
    InfinityTransform t;
    t.lambdas.assign(n, 0);
    if (round > 0 || !try_identity) {
      for (auto& l : t.lambdas) l = Integer(static_cast<unsigned long>(rng() % span));
    }
    out.rounds = round + 1;
    PolynomialSystem moved = apply_transform(system, t);
    bool same_degrees = moved.degrees() == system.degrees();
    bool ok = false;
    if (same_degrees) {
      try {
        ok = check_no_infinity(moved);
      } catch (const PositiveDimensionalError&) {
        ok = false;
      }
    }
    if (ok) {
      out.system = std::move(moved);
      out.transform = std::move(t);
      return out;
    }
  }
  throw PositiveDimensionalError("system may not be zero-dimensional in P^n");
}

std::int64_t infinity_gap_bits(const PolynomialSystem& transformed,
                               const InfinityTransform& t) {
  if (t.is_identity()) return 0;
  const std::size_t n = transformed.num_vars();
  std::size_t j = 0;
  while (t.lambdas[j] == 0) ++j;
  // y_j = lambda_j x_j turns sum lambda_i x_i into a form with pivot 1
  const Integer& lj = t.lambdas[j];
  std::vector<MultiPoly> scaled;
  for (const auto& f : transformed.polys()) {
    const std::int64_t d = f.total_degree();
    MultiPoly g(n);
    for (const auto& [m, c] : f.terms()) {
      Integer k;
      mpz_pow_ui(k.get_mpz_t(), lj.get_mpz_t(),
                 static_cast<unsigned long>(d - m[j]));
      g.add_term(m, c * k);
    }
    scaled.push_back(std::move(g));
  }
  std::vector<Integer> coeffs = t.lambdas;
  coeffs[j] = 1;
  EliminationResult e = hidden_var_resultant(PolynomialSystem(std::move(scaled)),
                                             LinearForm(coeffs, j));
  // w = 1 + u with u a root of e; strip the roots u = -1
  UniPoly q = squarefree_part(e.polynomial);
  const UniPoly t_plus_1({Integer(1), Integer(1)});
  while (q.degree() >= 1 && q.eval(Integer(-1)) == 0) q = exact_divide(q, t_plus_1);
  // |q(-1)| >= 1 and |lc q| prod_{j != i} |1 + u_j| <= 2^deg |q|_2
  return q.degree() + mahler_bound(q) + 1;
}

Classification classify_and_invert(const Reconstruction& r,
                                   const InfinityTransform& t,
                                   std::int64_t gap_bits,
                                   std::int64_t quality) {
  const std::size_t n = r.leaf_roots.size();
  std::vector<RootApproximator> approx;
  approx.reserve(n);
  for (const auto& rs : r.leaf_roots) approx.emplace_back(rs);
  const bool identity = t.lambdas.empty() || t.is_identity();
  std::int64_t lambda_bits = 0;
  if (!identity) {
    Integer sum = 0;
    for (const auto& l : t.lambdas) sum += abs(l);
    lambda_bits = bit_length(sum);
  }

  // which solutions are finite
  std::vector<bool> finite(r.points.size(), true);
  if (!identity) {
    const std::int64_t q = gap_bits + lambda_bits + 4;
    for (std::size_t k = 0; k < r.points.size(); ++k) {
      ComplexBox w = ComplexBox::point(Dyadic(1));
      for (std::size_t i = 0; i < n; ++i) {
        if (t.lambdas[i] == 0) continue;
        w = w + approx[i].box(r.points[k][i], q).scale(DyadicInterval(Dyadic(t.lambdas[i])));
      }
      // |w| is 0 or at least 2^-gap, and w is known to 2^-(gap+2)
      finite[k] = !(w.mag_upper(gap_bits + 4) < pow2(-gap_bits));
    }
  }

  Classification out;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < finite.size(); ++k) {
    if (finite[k]) {
      kept.push_back(k);
    } else {
      ++out.dropped;
    }
  }
  const Dyadic target = pow2(-quality);
  for (std::int64_t q = quality + 2;; q += std::max<std::int64_t>(q, 8)) {
    if (q > kMaxQuality) {
      throw CertificationError("solution boxes could not be separated");
    }
    std::vector<SolutionBox> boxes;
    bool narrow = true;
    for (std::size_t k : kept) {
      SolutionBox b;
      b.quality = quality;
      const std::int64_t qq = q + (identity ? 0 : gap_bits + lambda_bits + 2);
      ComplexBox w = ComplexBox::point(Dyadic(1));
      for (std::size_t i = 0; i < n; ++i) {
        b.coordinates.push_back(approx[i].box(r.points[k][i], qq));
        if (!identity && t.lambdas[i] != 0) {
          w = w + b.coordinates.back().scale(DyadicInterval(Dyadic(t.lambdas[i])));
        }
      }
      if (!identity) {
        for (auto& c : b.coordinates) c = divide(c, w, qq + 2);
      }
      for (const auto& c : b.coordinates) {
        if (!(c.half_width() < target)) narrow = false;
      }
      boxes.push_back(std::move(b));
    }
    if (!narrow) continue;
    bool separated = true;
    for (std::size_t a = 0; a < boxes.size() && separated; ++a) {
      for (std::size_t b = a + 1; b < boxes.size(); ++b) {
        if (!disjoint(boxes[a].coordinates, boxes[b].coordinates)) {
          separated = false;
          break;
        }
      }
    }
    if (separated) {
      out.finite = std::move(boxes);
      return out;
    }
  }
}

SolveResult solve(const PolynomialSystem& system, std::int64_t quality,
                  std::uint64_t rng_seed) {
  if (quality < 1) throw PreconditionError("quality must be at least 1");
  const std::size_t n = system.num_vars();
  if (n == 0 || system.size() != n) {
    throw PreconditionError("solve needs a square system");
  }
  SolveResult out;
  for (std::size_t attempt = 0;; ++attempt) {
    InfinityRemoval moved =
        remove_infinity(system, split_seed(rng_seed, 3 * attempt), attempt == 0);
    out.infinity_rounds += moved.rounds;
    EliminationOracle oracle(moved.system);
    SlfFamily family = build_slf_family(oracle, split_seed(rng_seed, 3 * attempt + 1));
    StrongSlf strong;
    try {
      strong = select_strong_slf(family, oracle, split_seed(rng_seed, 3 * attempt + 2));
    } catch (const CertificationError&) {
      // fresh coordinates rather than an uncertified form
      if (attempt + 1 >= kMaxSolveAttempts) throw;
      out.oracle_calls += oracle.calls();
      continue;
    }
    out.transform = moved.transform;
    out.form = strong.form;
    out.elimination = strong.elimination.polynomial;
    Reconstruction r = reconstruct(strong.tree, quality);
    out.gap_bits = infinity_gap_bits(moved.system, moved.transform);
    out.oracle_calls += oracle.calls() + (moved.transform.is_identity() ? 0 : 1);
    Classification c = classify_and_invert(r, moved.transform, out.gap_bits, quality);
    out.dropped_at_infinity = c.dropped;
    for (const auto& b : c.finite) {
      if (!certify_box(system, b)) {
        throw CertificationError("a solution box failed interval certification");
      }
    }
    if (Integer(static_cast<unsigned long>(c.finite.size())) > system.bezout_bound()) {
      throw CertificationError("more solutions than the Bezout bound");
    }
    out.solutions = std::move(c.finite);
    out.tree = std::move(strong.tree);
    return out;
  }
}

}  // namespace zds
