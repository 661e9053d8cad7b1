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

// Separating integers for two-dimensional grids X x Y of root sets, and
// lifting of projected points x + s*y back to the grid.

#ifndef ZDSOLVE_GRID_HPP_
#define ZDSOLVE_GRID_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zdsolve/gallop_sort.hpp"
#include "zdsolve/numerics.hpp"
#include "zdsolve/roots.hpp"

namespace zds {

struct DiffEntry {
  /// Approximation of |z_i - z_j| with the table's relative quality.
  Dyadic approx;
  BitMagnitude magnitude;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct DiffTable {
  std::vector<DiffEntry> entries;
  /// Relative quality rho: |approx - exact| < 2^-rho * exact, and <= 1.
  std::int64_t quality = 0;
  bool sorted = false;
};

/// Sizes of the search: d is the larger polynomial degree, and both d^4 and
/// c are rounded up to powers of two.
struct GridParams {
  std::int64_t d = 1;
  Integer d4;
  Integer c;
  Integer range;  // d4 * c
  std::int64_t rho = 0;  // ceil log2(64 * range)
};

GridParams grid_params(const RootSet& x, const RootSet& y,
                       const Integer& c);

struct SeparatingInterval {
  Integer s_star;
  /// Requested block length c (not rounded).
  Integer block_length;
  Integer search_range_max;
  /// |P(s_i, s'_i)| at every bisection level, starting with the full range.
  std::vector<std::size_t> level_counts;
};

/// Value of the rounding map: 0, a nonnegative integer, or +infinity.
struct RoundedFraction {
  bool infinite = false;
  Integer value;

  /// Compares against the finite integer s.
  bool at_least(const Integer& s) const { return infinite || value >= s; }
  bool at_most(const Integer& s) const { return !infinite && value <= s; }
  friend bool operator==(const RoundedFraction&,
                         const RoundedFraction&) = default;
};

/// Distances within X (first, sorted) and within Y (second).
std::pair<DiffTable, DiffTable> build_diff_tables(const RootSet& x,
                                                  const RootSet& y,
                                                  const Integer& c);

/// Distance table of one root set at relative quality rho.
DiffTable build_diff_table(const RootSet& x, std::int64_t rho);

DiffTable sort_diffs(DiffTable t, MergeStats* stats = nullptr);

/// [nu~ / delta~] with the thresholds 1/8 and 8 * range; ties round down.
RoundedFraction round_fraction(const Dyadic& nu, const Dyadic& delta,
                               const Integer& range);

/// |{(nu, delta) : [nu / delta] in {s, ..., s2}}| via two binary searches on
/// the sorted table per delta.
std::size_t preimage_count(const DiffTable& nu, const DiffTable& delta,
                           const Integer& s, const Integer& s2,
                           const Integer& range);

/// Block {s*, ..., s*+c-1} of integers separating for X x Y, with
/// |(x+sy) - (x'+sy')| >= |y - y'| / 4 on distinct grid points.
SeparatingInterval find_separating_block(const RootSet& x, const RootSet& y,
                                         const Integer& c = 1);

struct LiftedPair {
  std::size_t x_index = 0;
  std::size_t y_index = 0;
  ComplexBox x;
  ComplexBox y;
};

/// Preimages (x_z, y_z) with x_z + s*y_z = z for the selected roots z of
/// `z`, with boxes of half-width < 2^-quality. Throws NoPreimageError when a
/// candidate set empties; a point is accepted only once its unique candidate
/// survives the membership test at radius 2^-quality.
std::vector<LiftedPair> lift(RootApproximator& z,
                             const std::vector<std::size_t>& which,
                             RootApproximator& x, RootApproximator& y,
                             const Integer& s, std::int64_t quality);

/// Same over every root of `z`, in order.
std::vector<LiftedPair> lift(const RootSet& z, const RootSet& x,
                             const RootSet& y, const Integer& s,
                             std::int64_t quality);

}  // namespace zds

#endif  // ZDSOLVE_GRID_HPP_
