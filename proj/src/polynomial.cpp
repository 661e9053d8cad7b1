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

#include "zdsolve/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "zdsolve/errors.hpp"

namespace zds {

std::uint32_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Integer& c) { return UniPoly({c}); }

UniPoly UniPoly::linear_root(const Integer& root) {
  return UniPoly({Integer(-root), Integer(1)});
}

UniPoly UniPoly::linear_root(const Rational& root) {
  return UniPoly({Integer(-root.get_num()), root.get_den()});
}

UniPoly UniPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

Integer UniPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::normalized() const {
  UniPoly p = primitive();
  if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
  return p;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return UniPoly(std::move(v));
}

Integer UniPoly::max_norm() const {
  Integer m = 0;
  for (const auto& c : coeffs_) m = std::max(m, Integer(abs(c)));
  return m;
}

Magnitude UniPoly::magnitude() const {
  return {std::max<std::int64_t>(degree(), 0),
          std::max<std::int64_t>(bit_length(max_norm()), 1)};
}

Integer UniPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * x + Rational(*it);
  }
  return r;
}

ComplexBox UniPoly::eval(const ComplexBox& z) const {
  ComplexBox r = ComplexBox::point(Dyadic());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * z + ComplexBox::point(Dyadic(*it));
  }
  return r;
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (std::min(a.coeffs_.size(), b.coeffs_.size()) > 24) {
    return multiply_kronecker(a, b);
  }
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Integer& c, const UniPoly& a) {
  if (sgn(c) == 0) return {};
  std::vector<Integer> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Integer a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = var + (k > 1 ? "^" + std::to_string(k) : "");
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

UniPoly multiply_kronecker(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::size_t shorter = std::min(ca.size(), cb.size());
  // |c_j| <= shorter * |a|_inf * |b|_inf < 2^(k-1)
  std::int64_t k = bit_length(a.max_norm()) + bit_length(b.max_norm()) +
                   bit_length(Integer(static_cast<unsigned long>(shorter))) + 1;
  auto pack = [k](const std::vector<Integer>& c) {
    Integer v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
      v += *it;
    }
    return v;
  };
  Integer prod = pack(ca) * pack(cb);
  std::vector<Integer> out(ca.size() + cb.size() - 1);
  Integer half = 1;
  mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(),
               static_cast<mp_bitcnt_t>(k - 1));
  Integer full = half * 2;
  for (auto& c : out) {
    Integer low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), prod.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(k));
    if (low >= half) low -= full;
    c = low;
    prod -= low;
    mpz_fdiv_q_2exp(prod.get_mpz_t(), prod.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(k));
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> pseudo_divide(const UniPoly& a,
                                          const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo_divide by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  const Integer& lb = b.leading();
  std::int64_t db = b.degree();
  std::int64_t e = a.degree() - db + 1;
  std::vector<Integer> r = a.coefficients();
  std::vector<Integer> q(static_cast<std::size_t>(e));
  for (std::int64_t k = a.degree(); k >= db; --k) {
    Integer t = r[static_cast<std::size_t>(k)];
    for (auto& x : q) x *= lb;
    q[static_cast<std::size_t>(k - db)] += t;
    for (auto& x : r) x *= lb;
    for (std::int64_t i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(k - db + i)] -=
          t * b[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(k));
    --e;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  return {scale * UniPoly(std::move(q)), scale * UniPoly(std::move(r))};
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw PreconditionError("exact_divide by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw PreconditionError("exact_divide: divisor does not divide");
  }
  std::int64_t db = b.degree();
  std::vector<Integer> r = a.coefficients();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (std::int64_t k = a.degree(); k >= db; --k) {
    const Integer& top = r[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw PreconditionError("exact_divide: divisor does not divide");
    }
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    q[static_cast<std::size_t>(k - db)] = t;
    for (std::int64_t i = 0; i <= db; ++i) {
      mpz_submul(r[static_cast<std::size_t>(k - db + i)].get_mpz_t(),
                 t.get_mpz_t(), b[static_cast<std::size_t>(i)].get_mpz_t());
    }
  }
  for (const auto& x : r) {
    if (sgn(x) != 0) {
      throw PreconditionError("exact_divide: divisor does not divide");
    }
  }
  return UniPoly(std::move(q));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  UniPoly A = a.primitive();
  UniPoly B = b.primitive();
  if (A.degree() < B.degree()) std::swap(A, B);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    std::int64_t delta = A.degree() - B.degree();
    UniPoly R = pseudo_divide(A, B).second;
    if (R.is_zero()) return B.normalized();
    if (R.degree() == 0) return UniPoly::constant(1);
    A = B;
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer divisor = g * hd;
    std::vector<Integer> v = R.coefficients();
    for (auto& c : v) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    }
    B = UniPoly(std::move(v));
    g = A.leading();
    // h = g^delta / h^(delta-1); unchanged when delta = 0
    if (delta > 0) {
      Integer gd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(),
                 static_cast<unsigned long>(delta));
      Integer hd1;
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(),
                 static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_part of zero");
  if (f.degree() == 0) return UniPoly::constant(1);
  UniPoly g = gcd(f, f.derivative());
  return exact_divide(f.primitive(), g).normalized();
}

std::vector<std::pair<UniPoly, std::size_t>> squarefree_decomposition(
    const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_decomposition of zero");
  std::vector<std::pair<UniPoly, std::size_t>> out;
  // P_k = squarefree part of f_{k-1}, where f_k = gcd(f_{k-1}, f_{k-1}');
  // P_k is the product of the factors of multiplicity >= k.
  UniPoly current = f.normalized();
  UniPoly p_prev;
  std::size_t k = 0;
  while (current.degree() > 0) {
    UniPoly p = squarefree_part(current);
    if (k > 0) {
      UniPoly h = exact_divide(p_prev, p).normalized();
      if (h.degree() > 0) out.emplace_back(h, k);
    }
    p_prev = p;
    ++k;
    current = gcd(current, current.derivative());
  }
  if (k > 0 && p_prev.degree() > 0) out.emplace_back(p_prev, k);
  return out;
}

Integer norm2_squared(const UniPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coefficients()) s += c * c;
  return s;
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(std::vector<Integer> coefficients, std::size_t pivot)
    : coeffs_(std::move(coefficients)), pivot_(pivot) {
  if (pivot_ >= coeffs_.size() || coeffs_[pivot_] != 1) {
    throw PreconditionError("linear form: pivot coefficient must be 1");
  }
}

LinearForm LinearForm::coordinate(std::size_t index, std::size_t num_vars) {
  std::vector<Integer> c(num_vars);
  c.at(index) = 1;
  return {std::move(c), index};
}

LinearForm LinearForm::from_coefficients(std::vector<Integer> coefficients) {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (sgn(coefficients[i]) != 0) return {std::move(coefficients), i};
  }
  throw PreconditionError("linear form: all coefficients are zero");
}

std::int64_t LinearForm::bitsize() const {
  std::int64_t b = 0;
  for (const auto& c : coeffs_) b = std::max(b, bit_length(c));
  return b;
}

LinearForm LinearForm::combine(const LinearForm& l1, const Integer& s,
                               const LinearForm& l2) {
  if (l1.num_vars() != l2.num_vars()) {
    throw PreconditionError("combine: variable count mismatch");
  }
  std::vector<Integer> c(l1.num_vars());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = l1.coeffs_[i] + s * l2.coeffs_[i];
  }
  return {std::move(c), l1.pivot_};
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(std::size_t num_vars, const Terms& terms)
    : num_vars_(num_vars) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Integer& c) {
  MultiPoly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw PreconditionError("variable index out of range");
  Monomial m(num_vars, 0);
  m[index] = 1;
  MultiPoly p(num_vars);
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::from_linear_form(const LinearForm& l) {
  MultiPoly p(l.num_vars());
  for (std::size_t i = 0; i < l.num_vars(); ++i) {
    Monomial m(l.num_vars(), 0);
    m[i] = 1;
    p.add_term(m, l.coefficients()[i]);
  }
  return p;
}

MultiPoly MultiPoly::from_univariate(const UniPoly& f, std::size_t num_vars,
                                     std::size_t var) {
  MultiPoly p(num_vars);
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    Monomial m(num_vars, 0);
    m.at(var) = static_cast<std::uint32_t>(k);
    p.add_term(m, f[k]);
  }
  return p;
}

Integer MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (m.size() != num_vars_) {
    throw PreconditionError("monomial length does not match variable count");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::int64_t MultiPoly::total_degree() const {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) {
    d = std::max<std::int64_t>(d, zds::total_degree(m));
  }
  return d;
}

std::int64_t MultiPoly::degree_in(std::size_t var) const {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, m.at(var));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  std::int64_t d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return zds::total_degree(t.first) == d;
  });
}

Magnitude MultiPoly::magnitude() const {
  std::int64_t b = 1;
  for (const auto& [m, c] : terms_) b = std::max(b, bit_length(c));
  return {std::max<std::int64_t>(total_degree(), 0), b};
}

MultiPoly MultiPoly::homogeneous_part(std::int64_t d) const {
  MultiPoly p(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (zds::total_degree(m) == d) p.terms_.emplace(m, c);
  }
  return p;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& g) const {
  if (g.num_vars_ != num_vars_) {
    throw PreconditionError("substitute: variable count mismatch");
  }
  std::int64_t deg = degree_in(var);
  if (deg < 0) return *this;
  std::vector<MultiPoly> slices(static_cast<std::size_t>(deg) + 1,
                                MultiPoly(num_vars_));
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r[var] = 0;
    slices[m[var]].terms_.emplace(r, c);
  }
  MultiPoly acc = slices.back();
  for (std::size_t k = slices.size() - 1; k-- > 0;) {
    acc = multiply(acc, g) + slices[k];
  }
  return acc;
}

MultiPoly MultiPoly::specialize(std::size_t var, const Integer& value) const {
  if (var >= num_vars_) throw PreconditionError("specialize: bad variable");
  MultiPoly p(num_vars_ - 1);
  for (const auto& [m, c] : terms_) {
    Monomial r;
    r.reserve(num_vars_ - 1);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (i != var) r.push_back(m[i]);
    }
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), value.get_mpz_t(), m[var]);
    p.add_term(r, c * v);
  }
  return p;
}

MultiPoly MultiPoly::extend(std::size_t num_vars) const {
  if (num_vars < num_vars_) throw PreconditionError("extend: cannot shrink");
  MultiPoly p(num_vars);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r.resize(num_vars, 0);
    p.terms_.emplace(r, c);
  }
  return p;
}

UniPoly MultiPoly::to_univariate(std::size_t var) const {
  std::vector<Integer> v(static_cast<std::size_t>(
      std::max<std::int64_t>(degree_in(var) + 1, 0)));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (i != var && m[i] != 0) {
        throw PreconditionError("to_univariate: polynomial is multivariate");
      }
    }
    v[m[var]] = c;
  }
  return UniPoly(std::move(v));
}

Integer MultiPoly::eval(const std::vector<Integer>& point) const {
  if (point.size() != num_vars_) throw PreconditionError("eval: bad point");
  Integer s = 0;
  for (const auto& [m, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), m[i]);
      t *= p;
    }
    s += t;
  }
  return s;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != num_vars_) throw PreconditionError("eval: bad point");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    }
    s += t;
  }
  return s;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars_ != b.num_vars_) {
    throw PreconditionError("add: variable count mismatch");
  }
  MultiPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + (-b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return multiply(a, b);
}

MultiPoly operator*(const Integer& c, const MultiPoly& a) {
  MultiPoly r(a.num_vars_);
  if (sgn(c) == 0) return r;
  r = a;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

MultiPoly multiply_sparse(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw PreconditionError("multiply: variable count mismatch");
  }
  std::map<Monomial, Integer> acc;
  Monomial m(a.num_vars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      Integer& slot = acc[m];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  return MultiPoly(a.num_vars(), acc);
}

namespace {

struct KroneckerLayout {
  std::vector<std::uint64_t> radix;   // per-variable degree bound + 1
  std::vector<std::uint64_t> stride;  // mixed-radix place values
  std::uint64_t length = 1;
};

KroneckerLayout layout_for(const MultiPoly& a, const MultiPoly& b) {
  KroneckerLayout k;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    std::uint64_t r = static_cast<std::uint64_t>(a.degree_in(i) +
                                                 b.degree_in(i) + 1);
    k.radix.push_back(r);
    k.stride.push_back(k.length);
    k.length *= r;
  }
  return k;
}

}  // namespace

MultiPoly multiply_kronecker(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw PreconditionError("multiply: variable count mismatch");
  }
  std::size_t n = a.num_vars();
  if (a.is_zero() || b.is_zero()) return MultiPoly(n);
  KroneckerLayout k = layout_for(a, b);
  auto pack = [&](const MultiPoly& p) {
    std::uint64_t top = 0;
    for (const auto& [m, c] : p.terms()) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx += m[i] * k.stride[i];
      top = std::max(top, idx);
    }
    std::vector<Integer> v(top + 1);
    for (const auto& [m, c] : p.terms()) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx += m[i] * k.stride[i];
      v[idx] = c;
    }
    return UniPoly(std::move(v));
  };
  UniPoly prod = multiply_kronecker(pack(a), pack(b));
  MultiPoly r(n);
  Monomial m(n);
  for (std::size_t idx = 0; idx < prod.coefficients().size(); ++idx) {
    if (sgn(prod[idx]) == 0) continue;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = static_cast<std::uint32_t>(rest % k.radix[i]);
      rest /= k.radix[i];
    }
    r.add_term(m, prod[idx]);
  }
  return r;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw PreconditionError("multiply: variable count mismatch");
  }
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.num_vars());
  if (a.size() * b.size() < 64) return multiply_sparse(a, b);
  KroneckerLayout k = layout_for(a, b);
  // Dense enough: the packed length is within a small factor of the number
  // of term products.
  if (k.length <= 4 * a.size() * b.size() && k.length <= (1u << 22)) {
    return multiply_kronecker(a, b);
  }
  return multiply_sparse(a, b);
}

MultiPoly pow(const MultiPoly& a, std::uint32_t k) {
  MultiPoly r = MultiPoly::constant(a.num_vars(), 1);
  MultiPoly base = a;
  while (k > 0) {
    if (k & 1u) r = multiply(r, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return r;
}

namespace {

MultiPoly shear_with_sign(const MultiPoly& f, const LinearForm& l, int sign) {
  if (l.num_vars() != f.num_vars()) {
    throw PreconditionError("shear: variable count mismatch");
  }
  std::size_t n = f.num_vars();
  std::size_t j = l.pivot();
  MultiPoly g = MultiPoly::variable(n, j);
  bool trivial = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == j || sgn(l.coefficients()[i]) == 0) continue;
    trivial = false;
    Integer c = sign < 0 ? Integer(-l.coefficients()[i]) : l.coefficients()[i];
    g = g + c * MultiPoly::variable(n, i);
  }
  if (trivial) return f;
  return f.substitute(j, g);
}

}  // namespace

MultiPoly shear(const MultiPoly& f, const LinearForm& l) {
  return shear_with_sign(f, l, -1);
}

MultiPoly unshear(const MultiPoly& f, const LinearForm& l) {
  return shear_with_sign(f, l, +1);
}

MultiPoly homogenize(const MultiPoly& f, std::int64_t d) {
  if (d < f.total_degree()) {
    throw PreconditionError("homogenize: degree below total degree");
  }
  MultiPoly F(f.num_vars() + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m;
    r.push_back(static_cast<std::uint32_t>(d - total_degree(m)));
    F.add_term(r, c);
  }
  return F;
}

MultiPoly restrict_to_infinity(const MultiPoly& F) {
  if (F.num_vars() == 0) {
    throw PreconditionError("restrict_to_infinity: no variables");
  }
  MultiPoly f(F.num_vars() - 1);
  for (const auto& [m, c] : F.terms()) {
    if (m.back() != 0) continue;
    f.add_term(Monomial(m.begin(), m.end() - 1), c);
  }
  return f;
}

ComplexBox eval_interval(const MultiPoly& f, const std::vector<ComplexBox>& p,
                         std::int64_t precision) {
  if (p.size() != f.num_vars()) {
    throw PreconditionError("eval_interval: point dimension mismatch");
  }
  auto round = [precision](const ComplexBox& b) {
    return precision >= 0 ? b.round_outward(precision) : b;
  };
  std::vector<std::vector<ComplexBox>> powers(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t d = f.degree_in(i);
    powers[i].push_back(ComplexBox::point(Dyadic(1)));
    for (std::int64_t k = 1; k <= d; ++k) {
      powers[i].push_back(round(powers[i].back() * p[i]));
    }
  }
  ComplexBox acc = ComplexBox::point(Dyadic());
  for (const auto& [m, c] : f.terms()) {
    ComplexBox t = ComplexBox::point(Dyadic(c));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t = round(t * powers[i][m[i]]);
    }
    acc = acc + t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// PolynomialSystem

PolynomialSystem::PolynomialSystem(std::vector<MultiPoly> polys) {
  std::size_t n = 0;
  for (const auto& p : polys) n = std::max(n, p.num_vars());
  for (auto& p : polys) {
    if (p.num_vars() < n) p = p.extend(n);
  }
  if (polys.size() != n) {
    throw PreconditionError("non-square system: " +
                            std::to_string(polys.size()) + " polynomials in " +
                            std::to_string(n) + " variables");
  }
  num_vars_ = n;
  polys_ = std::move(polys);
}

Magnitude PolynomialSystem::magnitude() const {
  Magnitude m{0, 1};
  for (const auto& p : polys_) {
    Magnitude q = p.magnitude();
    m.degree = std::max(m.degree, q.degree);
    m.bitsize = std::max(m.bitsize, q.bitsize);
  }
  return m;
}

std::vector<std::int64_t> PolynomialSystem::degrees() const {
  std::vector<std::int64_t> d;
  for (const auto& p : polys_) d.push_back(p.total_degree());
  return d;
}

Integer PolynomialSystem::bezout_bound() const {
  Integer b = 1;
  for (const auto& p : polys_) {
    b *= static_cast<unsigned long>(std::max<std::int64_t>(p.total_degree(), 0));
  }
  return b;
}

}  // namespace zds
