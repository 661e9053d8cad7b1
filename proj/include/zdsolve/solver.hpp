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

// Solving by projection: all solutions are lifted down the separating-form
// tree from the roots of a strong elimination polynomial. Solutions at
// infinity are first moved away by a random projective change of
// coordinates, and recognized again at the end.

#ifndef ZDSOLVE_SOLVER_HPP_
#define ZDSOLVE_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zdsolve/slf.hpp"

namespace zds {

struct SolutionBox {
  std::vector<ComplexBox> coordinates;
  /// Every coordinate has half-width < 2^-quality.
  std::int64_t quality = 0;
};

/// Interval evaluation of every polynomial on the box contains 0.
bool certify_box(const PolynomialSystem& system, const SolutionBox& box);

struct ImagePoint {
  /// Index into the node's root set.
  std::size_t root = 0;
  ComplexBox box;
  /// Preimage indices in the children's root sets.
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
};

/// The projections of all solutions along one node's form.
struct LevelImage {
  std::size_t level = 0;
  std::size_t node = 0;
  std::vector<ImagePoint> points;
};

struct Reconstruction {
  /// Indexed like the tree's nodes.
  std::vector<LevelImage> images;
  /// Root sets of the coordinate elimination polynomials.
  std::vector<RootSet> leaf_roots;
  /// Per solution, the leaf root index of every coordinate.
  std::vector<std::vector<std::size_t>> points;
  std::vector<SolutionBox> solutions;
};

/// Lifts every root of the (strong) root polynomial down to the leaves.
/// Throws NoPreimageError if the root polynomial was not strong after all.
Reconstruction reconstruct(const SlfTree& tree, std::int64_t quality);

/// F*_i(x, x_{n+1}) = F_i(x, x_{n+1} + sum lambda_j x_j).
struct InfinityTransform {
  std::vector<Integer> lambdas;

  bool is_identity() const;
};

struct InfinityRemoval {
  /// The dehomogenized F*_i.
  PolynomialSystem system;
  InfinityTransform transform;
  std::size_t rounds = 0;
};

/// Applies the transform to an affine system (x_{n+1} = 1).
PolynomialSystem apply_transform(const PolynomialSystem& system,
                                 const InfinityTransform& t);

/// Tries lambda = 0 first (unless `try_identity` is false), then draws
/// lambda_i uniformly from {0, ..., 2 d^n} until the transformed system has
/// no solution at infinity. Throws PositiveDimensionalError after 128 rounds.
InfinityRemoval remove_infinity(const PolynomialSystem& system,
                                std::uint64_t rng_seed,
                                bool try_identity = true);

/// g such that w = 1 + sum lambda_i x*_i satisfies w = 0 or |w| >= 2^-g at
/// every solution x* of the transformed system. Makes one elimination call
/// along sum lambda_i x_i; 0 for the identity transform.
std::int64_t infinity_gap_bits(const PolynomialSystem& transformed,
                               const InfinityTransform& t);

struct Classification {
  std::vector<SolutionBox> finite;
  std::size_t dropped = 0;
};

/// x = x* / w for the solutions with w != 0, boxes of half-width
/// < 2^-quality, pairwise disjoint. Solutions with w = 0 are at infinity in
/// the original coordinates and are dropped.
Classification classify_and_invert(const Reconstruction& r,
                                   const InfinityTransform& t,
                                   std::int64_t gap_bits,
                                   std::int64_t quality);

struct SolveResult {
  std::vector<SolutionBox> solutions;
  InfinityTransform transform;
  std::size_t infinity_rounds = 0;
  std::size_t dropped_at_infinity = 0;
  LinearForm form;
  /// Strong elimination polynomial of the transformed system along `form`.
  UniPoly elimination;
  std::size_t oracle_calls = 0;
  std::int64_t gap_bits = 0;
  SlfTree tree;
};

/// All finite solutions of a square integer system as certified boxes of
/// half-width < 2^-quality.
SolveResult solve(const PolynomialSystem& system, std::int64_t quality,
                  std::uint64_t rng_seed);

}  // namespace zds

#endif  // ZDSOLVE_SOLVER_HPP_
