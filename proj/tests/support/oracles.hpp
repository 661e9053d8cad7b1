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

// Independent reference computations for tests. Nothing here shares code
// paths with the library beyond the basic polynomial containers.

#ifndef ZDSOLVE_TESTS_ORACLES_HPP_
#define ZDSOLVE_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "zdsolve/polynomial.hpp"

namespace oracle {

using zds::Integer;
using zds::MultiPoly;
using zds::Rational;
using zds::UniPoly;

using Matrix = std::vector<std::vector<Integer>>;

/// Fraction-free Bareiss determinant.
Integer bareiss_det(Matrix a);

/// Bareiss over Z[t]; entries are univariate polynomials.
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> a);

/// Sylvester resultant of two bivariate polynomials with respect to
/// variable `eliminate` (0 or 1); the result is in the other variable.
UniPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g,
                            std::size_t eliminate);

/// Schoolbook product.
UniPoly naive_multiply(const UniPoly& a, const UniPoly& b);

/// prod (den_i x - num_i)
UniPoly from_roots(const std::vector<Rational>& roots);

/// Multiset of pairwise distances |r_i - r_j| (i < j).
std::vector<Rational> pair_distances(const std::vector<Rational>& r);

/// True iff (x, y) -> x + s*y is injective on X x Y.
bool injective_on_grid(const std::vector<Rational>& xs,
                       const std::vector<Rational>& ys, const Integer& s);

/// True iff |(x + s y) - (x' + s y')| >= |y - y'| / 4 for all grid pairs.
bool quarter_slack_holds(const std::vector<Rational>& xs,
                         const std::vector<Rational>& ys, const Integer& s);

/// Uniform integer in [lo, hi].
Integer uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Uniform random coefficient of at most `bits` bits (sign included).
Integer random_coeff(std::mt19937_64& rng, int bits);

/// Dense random polynomial of exact degree d.
UniPoly random_unipoly(std::mt19937_64& rng, int d, int bits);

/// Random multivariate polynomial with total degree <= d, about `terms`
/// terms.
MultiPoly random_multipoly(std::mt19937_64& rng, std::size_t n, int d,
                           int bits, int terms);

/// Distinct random rationals p/q with |p| <= num_range, 1 <= q <= den_max.
std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t count,
                                       std::int64_t num_range,
                                       std::int64_t den_max);

/// Square system f_i = prod_k (q_ik (Ux)_i - p_ik) for a random unimodular
/// U (identity when mix is false), with its solution set.
struct KnownSystem {
  zds::PolynomialSystem system;
  std::vector<std::vector<Rational>> solutions;
};

KnownSystem grid_system(std::mt19937_64& rng, std::size_t n,
                        std::size_t roots_per_axis, bool mix,
                        std::int64_t num_range = 6, std::int64_t den_max = 1);

/// Exact evaluation of every polynomial at a rational point.
bool vanishes_at(const zds::PolynomialSystem& s,
                 const std::vector<Rational>& point);

/// Distinct values of sum c_i x_i over the points.
std::size_t distinct_projections(const std::vector<std::vector<Rational>>& pts,
                                 const std::vector<Integer>& c);

}  // namespace oracle

#endif  // ZDSOLVE_TESTS_ORACLES_HPP_
