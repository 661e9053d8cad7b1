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

// Hidden-variable Macaulay resultants along linear forms, shear selection,
// the test for solutions at infinity, and strongness certification.

#ifndef ZDSOLVE_ELIMINATION_HPP_
#define ZDSOLVE_ELIMINATION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdsolve/modular.hpp"
#include "zdsolve/polynomial.hpp"

namespace zds {

enum class Strongness { kCertifiedStrong, kUnknown, kCertifiedNotStrong };

std::string to_string(Strongness s);

/// Homogeneous form in num_vars variables whose coefficients are
/// polynomials in a hidden variable h.
struct HiddenForm {
  std::size_t num_vars = 0;
  /// -1 for the zero form.
  std::int64_t degree = -1;
  std::map<Monomial, UniPoly> terms;

  bool is_zero() const { return terms.empty(); }
};

/// Views f as a polynomial in the variables other than `pivot` over Z[h],
/// h = x_pivot, and homogenizes it with a new last variable.
HiddenForm hide_variable(const MultiPoly& f, std::size_t pivot);

/// A homogeneous integer form with constant coefficients.
HiddenForm constant_form(const MultiPoly& F);

struct MacaulayMatrix {
  std::size_t num_vars = 0;
  /// N = sum (d_i - 1) + 1
  std::int64_t degree_param = 0;
  std::vector<std::int64_t> degrees;
  /// Degree-N monomials labelling rows and columns alike.
  std::vector<Monomial> labels;
  /// The form whose multiple fills each row.
  std::vector<std::size_t> row_form;
  std::vector<std::vector<UniPoly>> entries;
  /// Labels divisible by x_i^{d_i} for at least two i.
  std::vector<std::size_t> s_indices;

  std::size_t dimension() const { return labels.size(); }
  IntMatrix evaluate(const Integer& h) const;
  IntMatrix evaluate_s(const Integer& h) const;
  /// Sum over the rows of the largest entry degree; bounds deg det M.
  std::int64_t degree_bound() const;
  std::int64_t s_degree_bound() const;
};

/// Classical Macaulay matrix of n forms of positive degree in n variables.
MacaulayMatrix build_macaulay(const std::vector<HiddenForm>& forms);

struct ResultantComputation {
  /// Not normalized; the zero polynomial when the resultant vanishes.
  UniPoly polynomial;
  bool used_gcp = false;
  std::size_t matrix_dimension = 0;
  std::size_t evaluations = 0;
};

/// Resultant of n forms in n variables as a polynomial in h, interpolated
/// from degree_cap + 1 values (the row-degree bound of det M when negative)
/// and checked on one more; the row-degree bound is used when the check
/// fails. Throws PositiveDimensionalError when two or more forms are
/// constant in the variables and share a root in h.
ResultantComputation forms_resultant(const std::vector<HiddenForm>& forms,
                                     std::int64_t degree_cap = -1);

/// det M(h) / det S(h) from an evaluation at h, when det S(h) != 0.
std::optional<Integer> macaulay_quotient_at(const MacaulayMatrix& m,
                                            const Integer& h);

/// The resultant at h from the generalized characteristic polynomial:
/// C(0) for det(tI + M(h)) = C(t) det(tI + S(h)). Valid whether or not
/// det S(h) vanishes.
Integer gcp_value_at(const MacaulayMatrix& m, const Integer& h);

struct EliminationResult {
  /// Primitive, positive leading coefficient.
  UniPoly polynomial;
  LinearForm along;
  Strongness strong = Strongness::kUnknown;
  std::optional<Integer> shear_lambda;
  bool used_gcp = false;
  std::size_t matrix_dimension = 0;
};

/// R^l: shears x_pivot -> x_pivot - sum l_i x_i, hides the pivot, and takes
/// the Macaulay resultant of the homogenized system. The computation is
/// deterministic; the seed is accepted for interface uniformity.
EliminationResult hidden_var_resultant(const PolynomialSystem& system,
                                       const LinearForm& form,
                                       std::uint64_t rng_seed = 0);

/// Forms l(s) = sum (base_i + slope_i * s) x_i with base_pivot = 1 and
/// slope_pivot = 0.
struct FormFamily {
  std::vector<Integer> base;
  std::vector<Integer> slope;
  std::size_t pivot = 0;

  LinearForm at(const Integer& s) const;
};

struct ShearChoice {
  Integer lambda_star;
  std::size_t candidate_set_size = 0;
  std::size_t draws = 0;
  LinearForm form;
  std::vector<MultiPoly> sheared;
};

/// Whether every polynomial has a term of its full total degree that does
/// not involve x_pivot.
bool meets_term_condition(const std::vector<MultiPoly>& polys,
                          std::size_t pivot);

/// Draws lambda from `lambdas` until the sheared system meets the term
/// condition; after 64 * |lambdas| draws the candidates are scanned in
/// order. Requires |lambdas| >= 2nd and a nonzero slope.
ShearChoice choose_shear(const PolynomialSystem& system,
                         const FormFamily& family,
                         const std::vector<Integer>& lambdas,
                         std::uint64_t rng_seed);

/// True iff the homogenized system has no zero with x_{n+1} = 0.
bool check_no_infinity(const PolynomialSystem& system);

/// Certified strong iff the system sheared along result.along has no
/// solution at infinity and meets the term condition; unknown otherwise.
Strongness certify_strong(const EliminationResult& result,
                          const PolynomialSystem& system);

/// Elimination oracle bound to one system, counting its calls.
class EliminationOracle {
 public:
  explicit EliminationOracle(PolynomialSystem system)
      : system_(std::move(system)) {}

  EliminationResult operator()(const LinearForm& form, std::uint64_t seed);
  std::size_t calls() const { return calls_; }
  const PolynomialSystem& system() const { return system_; }

 private:
  PolynomialSystem system_;
  std::size_t calls_ = 0;
};

}  // namespace zds

#endif  // ZDSOLVE_ELIMINATION_HPP_
