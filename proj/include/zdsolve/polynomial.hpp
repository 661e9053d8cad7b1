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

#ifndef ZDSOLVE_POLYNOMIAL_HPP_
#define ZDSOLVE_POLYNOMIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zdsolve/numerics.hpp"

namespace zds {

using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

/// (d, tau): degree bound and coefficient bit size bound.
struct Magnitude {
  std::int64_t degree = 0;
  std::int64_t bitsize = 1;
  friend bool operator==(const Magnitude&, const Magnitude&) = default;
};

/// Dense univariate integer polynomial, constant term first. The zero
/// polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coefficients);
  static UniPoly constant(const Integer& c);
  /// x - root
  static UniPoly linear_root(const Integer& root);
  /// den*x - num
  static UniPoly linear_root(const Rational& root);
  static UniPoly monomial(const Integer& c, std::size_t degree);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  const Integer& leading() const { return coeffs_.back(); }

  Integer content() const;
  UniPoly primitive() const;
  /// Primitive with positive leading coefficient.
  UniPoly normalized() const;
  UniPoly derivative() const;
  Magnitude magnitude() const;
  Integer max_norm() const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  ComplexBox eval(const ComplexBox& z) const;

  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Integer& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b; throws PreconditionError if b does not divide a
/// over the integers.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);
/// lc(b)^(deg a - deg b + 1) * a = q * b + r.
std::pair<UniPoly, UniPoly> pseudo_divide(const UniPoly& a, const UniPoly& b);
/// Primitive gcd with positive leading coefficient (subresultant PRS).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// f / gcd(f, f'), primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& f);
/// Yun-style decomposition: pairs (h_k, k) with f ~ prod h_k^k, each h_k
/// squarefree and primitive, nonconstant factors only.
std::vector<std::pair<UniPoly, std::size_t>> squarefree_decomposition(
    const UniPoly& f);
/// Sum of the squares of the coefficients.
Integer norm2_squared(const UniPoly& f);

/// Integer linear form l = sum l_i x_i with l_pivot = 1.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(std::vector<Integer> coefficients, std::size_t pivot);
  static LinearForm coordinate(std::size_t index, std::size_t num_vars);
  /// Pivot at the first nonzero coefficient, which must be 1.
  static LinearForm from_coefficients(std::vector<Integer> coefficients);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  std::size_t pivot() const { return pivot_; }
  std::size_t num_vars() const { return coeffs_.size(); }
  /// max bit length over the coefficients (mu).
  std::int64_t bitsize() const;
  /// l1 + s * l2 (the pivot of l1 is kept).
  static LinearForm combine(const LinearForm& l1, const Integer& s,
                            const LinearForm& l2);
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Integer> coeffs_;
  std::size_t pivot_ = 0;
};

/// Sparse multivariate integer polynomial in a fixed number of variables.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}
  MultiPoly(std::size_t num_vars, const Terms& terms);
  static MultiPoly constant(std::size_t num_vars, const Integer& c);
  /// x_index (0-based).
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly from_linear_form(const LinearForm& l);
  static MultiPoly from_univariate(const UniPoly& f, std::size_t num_vars,
                                   std::size_t var);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Integer& c);

  /// -1 for the zero polynomial.
  std::int64_t total_degree() const;
  std::int64_t degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  Magnitude magnitude() const;
  /// Terms of total degree d (the zero polynomial if there are none).
  MultiPoly homogeneous_part(std::int64_t d) const;

  /// Replaces x_var by g.
  MultiPoly substitute(std::size_t var, const MultiPoly& g) const;
  /// Sets x_var := value and removes the variable.
  MultiPoly specialize(std::size_t var, const Integer& value) const;
  /// Same polynomial with the variable list widened to `num_vars`.
  MultiPoly extend(std::size_t num_vars) const;
  /// Univariate view; all variables other than `var` must be absent.
  UniPoly to_univariate(std::size_t var = 0) const;

  Integer eval(const std::vector<Integer>& point) const;
  Rational eval(const std::vector<Rational>& point) const;

  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Integer& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t num_vars_ = 0;
  Terms terms_;
};

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);
MultiPoly multiply_kronecker(const MultiPoly& a, const MultiPoly& b);
MultiPoly multiply_sparse(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& a, std::uint32_t k);

/// Univariate product through a single big-integer product (evaluation at
/// 2^k with signed unpacking).
UniPoly multiply_kronecker(const UniPoly& a, const UniPoly& b);

/// x_pivot -> x_pivot - sum_{i != pivot} l_i x_i.
MultiPoly shear(const MultiPoly& f, const LinearForm& l);
/// Inverse of shear(., l): x_pivot -> x_pivot + sum_{i != pivot} l_i x_i.
MultiPoly unshear(const MultiPoly& f, const LinearForm& l);
/// Homogenizes with a new last variable to total degree d >= deg f.
MultiPoly homogenize(const MultiPoly& f, std::int64_t d);
/// Drops the terms containing the last variable, then drops the variable.
MultiPoly restrict_to_infinity(const MultiPoly& F);

/// Box enclosing f(p) for all p in the product of boxes. With precision >= 0
/// every intermediate result is rounded outward to 2^-precision.
ComplexBox eval_interval(const MultiPoly& f, const std::vector<ComplexBox>& p,
                         std::int64_t precision = -1);

/// Square system of n polynomials in n variables.
class PolynomialSystem {
 public:
  PolynomialSystem() = default;
  explicit PolynomialSystem(std::vector<MultiPoly> polys);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<MultiPoly>& polys() const { return polys_; }
  const MultiPoly& operator[](std::size_t i) const { return polys_[i]; }
  Magnitude magnitude() const;
  std::vector<std::int64_t> degrees() const;
  /// prod d_i
  Integer bezout_bound() const;
  friend bool operator==(const PolynomialSystem&,
                         const PolynomialSystem&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<MultiPoly> polys_;
};

// ---------------------------------------------------------------------------
// Text syntax: `3*x1^2*x2 - 4*x2 + 1`; `x` is accepted for `x1`.

/// Parses one polynomial; the variable count is max(num_vars, highest index).
MultiPoly parse_polynomial(const std::string& text, std::size_t num_vars = 0,
                           std::size_t line = 1);
/// Canonical text: descending total degree, then descending lexicographic
/// exponent order; unit coefficients and exponents are omitted.
std::string to_string(const MultiPoly& f);

/// Reads a system: optional `vars n` line, `#` comments, one polynomial per
/// nonblank line. Throws ParseError or PreconditionError (non-square).
PolynomialSystem parse_system(std::istream& in);
PolynomialSystem parse_system(const std::string& text);
std::string to_string(const PolynomialSystem& s);

/// Univariate polynomial in x (or x1).
UniPoly parse_univariate(const std::string& text);

}  // namespace zds

#endif  // ZDSOLVE_POLYNOMIAL_HPP_
