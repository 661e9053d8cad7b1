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

#include "zdsolve/elimination.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "zdsolve/errors.hpp"

namespace zds {

namespace {

// 0, 1, -1, 2, -2, ...
Integer sample_point(std::size_t k) {
  Integer v = static_cast<unsigned long>((k + 1) / 2);
  return k % 2 == 1 || k == 0 ? v : Integer(-v);
}

void monomials_of_degree(std::size_t n, std::uint32_t d, Monomial& cur,
                         std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = d + 1; e-- > 0;) {
    cur[pos] = e;
    monomials_of_degree(n, d - e, cur, pos + 1, out);
  }
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<std::size_t>& idx) {
  IntMatrix s(idx.size(), std::vector<Integer>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) s[r][c] = a[idx[r]][idx[c]];
  }
  return s;
}

std::int64_t row_degree_sum(const MacaulayMatrix& m,
                            const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  std::int64_t total = 0;
  for (std::size_t r : rows) {
    std::int64_t best = 0;
    for (std::size_t c : cols) best = std::max(best, m.entries[r][c].degree());
    total += best;
  }
  return total;
}

std::optional<UniPoly> try_interpolate(const std::vector<Integer>& xs,
                                       const std::vector<Integer>& ys,
                                       std::size_t count) {
  try {
    return interpolate({xs.begin(), xs.begin() + count},
                       {ys.begin(), ys.begin() + count});
  } catch (const CertificationError&) {
    return std::nullopt;
  }
}

UniPoly int_power(const UniPoly& f, Integer e) {
  UniPoly r = UniPoly::constant(1);
  UniPoly b = f;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

}  // namespace

std::string to_string(Strongness s) {
  switch (s) {
    case Strongness::kCertifiedStrong:
      return "certified-strong";
    case Strongness::kCertifiedNotStrong:
      return "certified-not-strong";
    case Strongness::kUnknown:
      break;
  }
  return "unknown";
}

HiddenForm hide_variable(const MultiPoly& f, std::size_t pivot) {
  if (pivot >= f.num_vars()) throw PreconditionError("hide_variable: pivot");
  HiddenForm out;
  out.num_vars = f.num_vars();
  for (const auto& [m, c] : f.terms()) {
    out.degree = std::max<std::int64_t>(out.degree, total_degree(m) - m[pivot]);
  }
  std::map<Monomial, std::vector<Integer>> acc;
  for (const auto& [m, c] : f.terms()) {
    Monomial r;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != pivot) r.push_back(m[i]);
    }
    std::uint32_t rest = total_degree(m) - m[pivot];
    r.push_back(static_cast<std::uint32_t>(out.degree) - rest);
    auto& coeffs = acc[r];
    if (coeffs.size() <= m[pivot]) coeffs.resize(m[pivot] + 1);
    coeffs[m[pivot]] += c;
  }
  for (auto& [r, coeffs] : acc) {
    UniPoly p(std::move(coeffs));
    if (!p.is_zero()) out.terms.emplace(r, std::move(p));
  }
  if (out.terms.empty()) out.degree = -1;
  return out;
}

HiddenForm constant_form(const MultiPoly& F) {
  if (!F.is_homogeneous()) throw PreconditionError("constant_form: not homogeneous");
  HiddenForm out;
  out.num_vars = F.num_vars();
  out.degree = F.total_degree();
  for (const auto& [m, c] : F.terms()) out.terms.emplace(m, UniPoly::constant(c));
  return out;
}

IntMatrix MacaulayMatrix::evaluate(const Integer& h) const {
  const std::size_t m = dimension();
  IntMatrix a(m, std::vector<Integer>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!entries[r][c].is_zero()) a[r][c] = entries[r][c].eval(h);
    }
  }
  return a;
}

IntMatrix MacaulayMatrix::evaluate_s(const Integer& h) const {
  IntMatrix s(s_indices.size(), std::vector<Integer>(s_indices.size()));
  for (std::size_t r = 0; r < s_indices.size(); ++r) {
    for (std::size_t c = 0; c < s_indices.size(); ++c) {
      const UniPoly& e = entries[s_indices[r]][s_indices[c]];
      if (!e.is_zero()) s[r][c] = e.eval(h);
    }
  }
  return s;
}

std::int64_t MacaulayMatrix::degree_bound() const {
  std::vector<std::size_t> all(dimension());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return row_degree_sum(*this, all, all);
}

std::int64_t MacaulayMatrix::s_degree_bound() const {
  return row_degree_sum(*this, s_indices, s_indices);
}

MacaulayMatrix build_macaulay(const std::vector<HiddenForm>& forms) {
  const std::size_t n = forms.size();
  if (n == 0) throw PreconditionError("build_macaulay: no forms");
  MacaulayMatrix out;
  out.num_vars = n;
  std::int64_t big_n = 1;
  for (const auto& f : forms) {
    if (f.num_vars != n) {
      throw PreconditionError("build_macaulay: need n forms in n variables");
    }
    if (f.is_zero()) throw PreconditionError("build_macaulay: zero polynomial");
    if (f.degree < 1) throw PreconditionError("build_macaulay: constant form");
    for (const auto& [m, c] : f.terms) {
      if (static_cast<std::int64_t>(total_degree(m)) != f.degree) {
        throw PreconditionError("build_macaulay: form not homogeneous");
      }
    }
    out.degrees.push_back(f.degree);
    big_n += f.degree - 1;
  }
  out.degree_param = big_n;
  Monomial cur(n);
  monomials_of_degree(n, static_cast<std::uint32_t>(big_n), cur, 0, out.labels);
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < out.labels.size(); ++k) index[out.labels[k]] = k;

  const std::size_t m = out.labels.size();
  out.entries.assign(m, std::vector<UniPoly>(m));
  for (std::size_t r = 0; r < m; ++r) {
    const Monomial& beta = out.labels[r];
    std::size_t divisible = 0;
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i] >= out.degrees[i]) {
        ++divisible;
        if (first == n) first = i;
      }
    }
    if (divisible >= 2) out.s_indices.push_back(r);
    out.row_form.push_back(first);
    Monomial cof = beta;
    cof[first] -= static_cast<std::uint32_t>(out.degrees[first]);
    for (const auto& [alpha, c] : forms[first].terms) {
      Monomial col = cof;
      for (std::size_t i = 0; i < n; ++i) col[i] += alpha[i];
      out.entries[r][index.at(col)] = c;
    }
  }
  return out;
}

std::optional<Integer> macaulay_quotient_at(const MacaulayMatrix& m,
                                            const Integer& h) {
  IntMatrix a = m.evaluate(h);
  if (m.s_indices.empty()) return det_crt(a);
  IntMatrix s = submatrix(a, m.s_indices);
  const Integer need_m = 2 * hadamard_bound(a) + 1;
  const Integer need_s = 2 * hadamard_bound(s) + 1;
  CrtAccumulator quotient;
  CrtAccumulator s_images;
  bool s_nonzero = false;
  for (std::size_t k = 0;; ++k) {
    std::uint64_t p = modular_prime(k);
    std::uint64_t ds = det_mod(s, p);
    if (!s_nonzero) {
      if (ds != 0) {
        s_nonzero = true;
      } else {
        s_images.add(0, p);
        if (s_images.modulus() > need_s) return std::nullopt;
      }
    }
    // primes dividing det S(h) are skipped
    if (ds != 0) quotient.add(mul_mod(det_mod(a, p), inv_mod(ds, p), p), p);
    if (s_nonzero && quotient.modulus() > need_m) return quotient.value();
  }
}

Integer gcp_value_at(const MacaulayMatrix& m, const Integer& h) {
  IntMatrix a = m.evaluate(h);
  IntMatrix s = submatrix(a, m.s_indices);
  for (auto& row : a) {
    for (auto& x : row) x = -x;
  }
  for (auto& row : s) {
    for (auto& x : row) x = -x;
  }
  // det(tI + M) = C(t) det(tI + S) with C(0) the resultant
  UniPoly pm(charpoly(a));
  UniPoly ps(charpoly(s));
  try {
    return exact_divide(pm, ps).coeff(0);
  } catch (const PreconditionError&) {
    throw CertificationError("characteristic polynomials do not divide");
  }
}

ResultantComputation forms_resultant(const std::vector<HiddenForm>& forms,
                                     std::int64_t degree_cap) {
  ResultantComputation out;
  const std::size_t n = forms.size();
  for (const auto& f : forms) {
    if (f.num_vars != n) {
      throw PreconditionError("resultant: need n forms in n variables");
    }
    if (f.is_zero()) return out;
  }
  std::vector<std::size_t> constant;
  for (std::size_t i = 0; i < n; ++i) {
    if (forms[i].degree == 0) constant.push_back(i);
  }
  if (constant.size() == 1) {
    // Res(c, F_2, ..., F_n) = c^(d_2 ... d_n)
    Integer e = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != constant[0]) e *= forms[j].degree;
    }
    out.polynomial = int_power(forms[constant[0]].terms.begin()->second, e);
    return out;
  }
  if (constant.size() >= 2) {
    UniPoly g = forms[constant[0]].terms.begin()->second;
    for (std::size_t k = 1; k < constant.size(); ++k) {
      g = gcd(g, forms[constant[k]].terms.begin()->second);
    }
    if (g.degree() >= 1) {
      throw PositiveDimensionalError(
          "two equations do not involve the remaining variables and share a "
          "root: the system is not zero-dimensional");
    }
    out.polynomial = UniPoly::constant(1);
    return out;
  }

  MacaulayMatrix m = build_macaulay(forms);
  out.matrix_dimension = m.dimension();
  const std::int64_t dm = m.degree_bound();
  const std::int64_t cap = degree_cap >= 0 ? std::min(degree_cap, dm) : dm;

  std::vector<Integer> xs;
  std::vector<Integer> ys;
  auto sample_until = [&](std::size_t count) {
    while (xs.size() < count) {
      Integer h = sample_point(xs.size());
      ++out.evaluations;
      std::optional<Integer> v = macaulay_quotient_at(m, h);
      if (!v) {
        out.used_gcp = true;
        v = gcp_value_at(m, h);
      }
      xs.push_back(h);
      ys.push_back(*v);
    }
  };

  const std::size_t base = static_cast<std::size_t>(cap) + 1;
  sample_until(base + 1);
  std::optional<UniPoly> p = try_interpolate(xs, ys, base);
  if (p && p->eval(xs.back()) == ys.back()) {
    out.polynomial = *p;
    return out;
  }
  // the cap was wrong; the row-degree bound is proven
  sample_until(static_cast<std::size_t>(dm) + 1);
  out.polynomial = interpolate(xs, ys);
  return out;
}

EliminationResult hidden_var_resultant(const PolynomialSystem& system,
                                       const LinearForm& form,
                                       std::uint64_t /*rng_seed*/) {
  const std::size_t n = system.num_vars();
  if (system.size() != n || n == 0) {
    throw PreconditionError("elimination needs a square system");
  }
  if (form.num_vars() != n) {
    throw PreconditionError("linear form has the wrong number of variables");
  }
  std::vector<HiddenForm> forms;
  for (const auto& f : system.polys()) {
    forms.push_back(hide_variable(shear(f, form), form.pivot()));
    if (forms.back().is_zero()) {
      throw PositiveDimensionalError("system contains the zero polynomial");
    }
  }
  Integer b = system.bezout_bound();
  std::int64_t cap = b.fits_slong_p() ? b.get_si() : -1;
  ResultantComputation r = forms_resultant(forms, cap);
  if (r.polynomial.is_zero()) {
    throw PositiveDimensionalError(
        "elimination polynomial vanishes identically: the system is not "
        "zero-dimensional along this form");
  }
  EliminationResult out;
  out.polynomial = r.polynomial.normalized();
  out.along = form;
  out.used_gcp = r.used_gcp;
  out.matrix_dimension = r.matrix_dimension;
  return out;
}

LinearForm FormFamily::at(const Integer& s) const {
  if (base.size() != slope.size()) {
    throw PreconditionError("form family: size mismatch");
  }
  std::vector<Integer> c(base.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = base[i] + s * slope[i];
  return LinearForm(std::move(c), pivot);
}

bool meets_term_condition(const std::vector<MultiPoly>& polys,
                          std::size_t pivot) {
  for (const auto& f : polys) {
    const std::int64_t d = f.total_degree();
    bool found = false;
    for (const auto& [m, c] : f.terms()) {
      if (m[pivot] == 0 && static_cast<std::int64_t>(total_degree(m)) == d) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ShearChoice choose_shear(const PolynomialSystem& system,
                         const FormFamily& family,
                         const std::vector<Integer>& lambdas,
                         std::uint64_t rng_seed) {
  const std::size_t n = system.num_vars();
  Integer d = 0;
  for (auto di : system.degrees()) d = std::max(d, Integer(di));
  if (Integer(static_cast<unsigned long>(lambdas.size())) < 2 * n * d) {
    throw PreconditionError("choose_shear: need at least 2nd candidates");
  }
  if (std::all_of(family.slope.begin(), family.slope.end(),
                  [](const Integer& a) { return a == 0; })) {
    throw PreconditionError("choose_shear: family does not vary");
  }
  ShearChoice out;
  out.candidate_set_size = lambdas.size();
  auto attempt = [&](const Integer& lambda) {
    ++out.draws;
    LinearForm l = family.at(lambda);
    std::vector<MultiPoly> sheared;
    for (const auto& f : system.polys()) sheared.push_back(shear(f, l));
    if (!meets_term_condition(sheared, l.pivot())) return false;
    out.lambda_star = lambda;
    out.form = std::move(l);
    out.sheared = std::move(sheared);
    return true;
  };
  std::mt19937_64 rng(rng_seed);
  const std::size_t cap = 64 * lambdas.size();
  for (std::size_t k = 0; k < cap; ++k) {
    if (attempt(lambdas[rng() % lambdas.size()])) return out;
  }
  for (const auto& lambda : lambdas) {
    if (attempt(lambda)) return out;
  }
  throw CertificationError("no candidate shear meets the term condition");
}

bool check_no_infinity(const PolynomialSystem& system) {
  const std::size_t n = system.num_vars();
  if (system.size() != n || n == 0) {
    throw PreconditionError("check_no_infinity needs a square system");
  }
  std::vector<HiddenForm> forms;
  for (const auto& f : system.polys()) {
    forms.push_back(constant_form(f.homogeneous_part(f.total_degree())));
  }
  return !forms_resultant(forms, 0).polynomial.is_zero();
}

Strongness certify_strong(const EliminationResult& result,
                          const PolynomialSystem& system) {
  // one variable: R is the input polynomial itself
  if (system.num_vars() == 1) return Strongness::kCertifiedStrong;
  std::vector<MultiPoly> sheared;
  for (const auto& f : system.polys()) sheared.push_back(shear(f, result.along));
  if (!meets_term_condition(sheared, result.along.pivot())) {
    return Strongness::kUnknown;
  }
  if (!check_no_infinity(PolynomialSystem(sheared))) return Strongness::kUnknown;
  return Strongness::kCertifiedStrong;
}

EliminationResult EliminationOracle::operator()(const LinearForm& form,
                                                std::uint64_t seed) {
  ++calls_;
  return hidden_var_resultant(system_, form, seed);
}

}  // namespace zds
