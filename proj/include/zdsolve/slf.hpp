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

// Separating linear forms by divide and conquer over the variables: leaves
// project onto single coordinates, and each internal node joins the forms
// of its children with a separating integer for their two root sets.

#ifndef ZDSOLVE_SLF_HPP_
#define ZDSOLVE_SLF_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zdsolve/elimination.hpp"
#include "zdsolve/grid.hpp"
#include "zdsolve/roots.hpp"

namespace zds {

struct SlfNode {
  /// Variables [lo, hi).
  std::size_t lo = 0;
  std::size_t hi = 0;
  /// Height above the leaves.
  std::size_t level = 0;
  LinearForm form;
  /// Absent at the root of a family, whose form is not yet fixed.
  std::optional<EliminationResult> elimination;
  /// Roots of the squarefree part of the elimination polynomial.
  RootSet roots;
  /// Internal nodes: form = left.form + s * right.form.
  Integer s;
  SeparatingInterval separation;
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;

  bool is_leaf() const { return !left.has_value(); }
};

struct SlfTree {
  std::size_t num_vars = 0;
  /// Largest total degree in the system.
  std::int64_t degree = 1;
  std::vector<SlfNode> nodes;
  std::size_t root = 0;
  std::size_t oracle_calls = 0;
  /// d^(4n ceil(log2 n)).
  Integer stated_bound;
  /// Bound implied by the search ranges actually used: 1 at the leaves,
  /// max(left, range * right) above.
  Integer derived_bound;

  const SlfNode& root_node() const { return nodes[root]; }
  /// Largest |coefficient| over all node forms.
  Integer max_coefficient() const;
};

/// The separating form and its elimination polynomial for every node, with
/// one oracle call per node (2n - 1 in total).
SlfTree build_slf_tree(EliminationOracle& oracle, std::uint64_t rng_seed);

struct SlfFamily {
  /// l(s) = sum (base_i + slope_i s) x_i.
  FormFamily form;
  Integer s_star;
  /// 2nd + 1 unless chosen larger.
  Integer block_length;
  /// Tree whose root form is left open; its children are complete.
  SlfTree tree;

  std::vector<Integer> block() const;
};

/// As build_slf_tree, but the root combination asks for a block of
/// consecutive separating integers (2nd + 1 when block_length is 0) and
/// makes no root oracle call.
SlfFamily build_slf_family(EliminationOracle& oracle, std::uint64_t rng_seed,
                           const Integer& block_length = 0);

struct StrongSlf {
  LinearForm form;
  EliminationResult elimination;
  /// The family tree with its root fixed to `form`.
  SlfTree tree;
};

/// Picks s in the family's block so that the system sheared along l(s)
/// meets the term condition, and certifies R^l(s) as strong. Requires a
/// system without solutions at infinity.
StrongSlf select_strong_slf(const SlfFamily& family, EliminationOracle& oracle,
                            std::uint64_t rng_seed);

/// Deterministic per-node seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace zds

#endif  // ZDSOLVE_SLF_HPP_
