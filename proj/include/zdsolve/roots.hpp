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

// Certified isolation of the complex roots of integer polynomials.

#ifndef ZDSOLVE_ROOTS_HPP_
#define ZDSOLVE_ROOTS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zdsolve/numerics.hpp"
#include "zdsolve/polynomial.hpp"

namespace zds {

/// Disk {z : |z - (re + i im)| <= radius} known to contain exactly one
/// distinct root of the squarefree factor `factor`.
struct CertifiedDisk {
  Dyadic re;
  Dyadic im;
  Dyadic radius;
  std::size_t factor = 0;
};

struct RootBox {
  ComplexBox box;
  std::size_t multiplicity = 1;
};

/// Sorted isolating boxes of the distinct roots of `polynomial`.
struct RootSet {
  UniPoly polynomial;
  std::vector<RootBox> roots;
  /// Every box has half-width < 2^-quality.
  std::int64_t quality = 0;

  /// Squarefree factors h_k (f ~ prod h_k^k); disks[i].factor indexes here.
  std::vector<UniPoly> factors;
  std::vector<std::size_t> factor_multiplicity;
  std::vector<CertifiedDisk> disks;

  std::size_t size() const { return roots.size(); }
  const ComplexBox& box(std::size_t i) const { return roots[i].box; }
  /// Exact center of the i-th box.
  ComplexBox center(std::size_t i) const;
};

struct MagnitudeBound {
  std::int64_t gamma = 1;
};

/// All distinct roots with multiplicities, boxes of half-width < 2^-quality.
RootSet isolate(const UniPoly& f, std::int64_t quality);

/// Same roots with boxes of half-width < 2^-quality; unchanged when quality
/// does not exceed the achieved one.
RootSet refine(const RootSet& rs, std::int64_t quality);

/// Gamma = ceil log2(1 + |f|_inf / |lc f|); every root satisfies |z| < 2^Gamma.
MagnitudeBound cauchy_bound(const UniPoly& f);

/// ceil log2 |f|_2, an upper bound on log2 Mea(f).
std::int64_t mahler_bound(const UniPoly& f);

/// Cached refinement of individual roots of a fixed root set; indices never
/// move, unlike refine() which re-sorts.
class RootApproximator {
 public:
  explicit RootApproximator(const RootSet& rs);

  std::size_t size() const { return disks_.size(); }
  /// Box of half-width < 2^-quality containing root i.
  ComplexBox box(std::size_t i, std::int64_t quality);
  /// Exact center of the current box for root i refined to `quality`.
  ComplexBox center(std::size_t i, std::int64_t quality);
  const RootSet& roots() const { return *rs_; }

 private:
  const RootSet* rs_;
  std::vector<CertifiedDisk> disks_;
};

/// Pellet test on the disk D(center, radius): true if the k-th coefficient of
/// f(center + radius z) strictly dominates the sum of the others, which
/// certifies exactly k roots (with multiplicity) in D.
bool pellet_test(const UniPoly& f, const Dyadic& re, const Dyadic& im,
                 const Dyadic& radius, std::size_t k);

/// Certifies that D(center, radius) holds no root: the Pellet test with k = 0,
/// retried after a few Graeffe root-squaring steps.
bool excludes_roots(const UniPoly& f, const Dyadic& re, const Dyadic& im,
                    const Dyadic& radius);

/// Smallest g >= 0 with |a_d| 2^(gd) > sum_{i<d} |a_i| 2^(gi) (Cauchy's
/// polynomial bound); every root satisfies |z| < 2^g.
std::int64_t root_radius_bits(const UniPoly& f);

}  // namespace zds

#endif  // ZDSOLVE_ROOTS_HPP_
