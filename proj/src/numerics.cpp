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

#include "zdsolve/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zdsolve/errors.hpp"

namespace zds {

namespace {

Integer shifted(const Integer& x, std::int64_t k) {
  Integer r;
  if (k >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(-k));
  }
  return r;
}

enum class Rounding { kDown, kUp, kNearest };

// round(num / den * 2^precision) / 2^precision
Dyadic round_quotient(const Integer& num, const Integer& den,
                      std::int64_t precision, Rounding mode) {
  Integer n = num;
  Integer d = den;
  if (sgn(d) < 0) {
    n = -n;
    d = -d;
  }
  if (precision >= 0) {
    n = shifted(n, precision);
  } else {
    d = shifted(d, -precision);
  }
  Integer q;
  switch (mode) {
    case Rounding::kDown:
      mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      break;
    case Rounding::kUp:
      mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      break;
    case Rounding::kNearest: {
      // floor((2n + d) / 2d)
      Integer two_n = shifted(n, 1) + d;
      Integer two_d = shifted(d, 1);
      mpz_fdiv_q(q.get_mpz_t(), two_n.get_mpz_t(), two_d.get_mpz_t());
      break;
    }
  }
  return Dyadic(q, -precision);
}

Integer isqrt_floor(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::int64_t bit_length(const Integer& x) {
  if (sgn(x) == 0) return 0;
  return static_cast<std::int64_t>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

std::int64_t ceil_log2(const Integer& x) {
  if (x < 1) throw PreconditionError("ceil_log2: argument below 1");
  Integer y = x - 1;
  return bit_length(y);
}

std::int64_t ceil_log2(const Rational& x) {
  if (x < 1) throw PreconditionError("ceil_log2: argument below 1");
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  // 2^k >= x  <=>  2^k >= ceil(x) for integer powers k >= 0.
  return ceil_log2(c);
}

Integer next_pow2(const Integer& x) {
  Integer r = 1;
  return shifted(r, ceil_log2(x));
}

// ---------------------------------------------------------------------------
// Dyadic

Dyadic::Dyadic(long value) : mantissa_(value), exponent_(0) { normalize(); }

Dyadic::Dyadic(Integer mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (sgn(mantissa_) == 0) {
    exponent_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::round_down(const Rational& q, std::int64_t precision) {
  return round_quotient(q.get_num(), q.get_den(), precision, Rounding::kDown);
}

Dyadic Dyadic::round_up(const Rational& q, std::int64_t precision) {
  return round_quotient(q.get_num(), q.get_den(), precision, Rounding::kUp);
}

Dyadic Dyadic::round_nearest(const Rational& q, std::int64_t precision) {
  return round_quotient(q.get_num(), q.get_den(), precision,
                        Rounding::kNearest);
}

Dyadic Dyadic::parse(const std::string& text) {
  auto star = text.find("*2^");
  if (star == std::string::npos) {
    throw PreconditionError("dyadic literal must look like m*2^e: " + text);
  }
  Integer m(text.substr(0, star), 10);
  std::int64_t e = std::stoll(text.substr(star + 3));
  return Dyadic(m, e);
}

std::int64_t Dyadic::floor_log2() const {
  if (is_zero()) throw PreconditionError("floor_log2 of zero");
  return bit_length(mantissa_) - 1 + exponent_;
}

Dyadic Dyadic::mul_2exp(std::int64_t k) const {
  if (is_zero()) return {};
  Dyadic r = *this;
  r.exponent_ += k;
  return r;
}

Dyadic Dyadic::round_down(std::int64_t precision) const {
  if (exponent_ >= -precision) return *this;
  return Dyadic(shifted(mantissa_, exponent_ + precision), -precision);
}

Dyadic Dyadic::round_up(std::int64_t precision) const {
  if (exponent_ >= -precision) return *this;
  return -((-*this).round_down(precision));
}

Dyadic Dyadic::round_nearest(std::int64_t precision) const {
  if (exponent_ >= -precision) return *this;
  return round_quotient(mantissa_, shifted(Integer(1), -exponent_), precision,
                        Rounding::kNearest);
}

Rational Dyadic::to_rational() const {
  Rational q;
  if (exponent_ >= 0) {
    q = Rational(shifted(mantissa_, exponent_));
  } else {
    q = Rational(mantissa_, shifted(Integer(1), -exponent_));
    q.canonicalize();
  }
  return q;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, mantissa_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(std::clamp<std::int64_t>(
                           exp2 + exponent_, -100000, 100000)));
}

std::string Dyadic::to_string() const {
  return mantissa_.get_str(10) + "*2^" + std::to_string(exponent_);
}

Dyadic operator-(const Dyadic& a) {
  Dyadic r = a;
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exponent_ <= b.exponent_) {
    return Dyadic(a.mantissa_ + shifted(b.mantissa_, b.exponent_ - a.exponent_),
                  a.exponent_);
  }
  return Dyadic(b.mantissa_ + shifted(a.mantissa_, a.exponent_ - b.exponent_),
                b.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

bool operator==(const Dyadic& a, const Dyadic& b) {
  return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign();
  int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same nonzero sign: compare magnitudes by leading bit first.
  std::int64_t la = a.floor_log2();
  std::int64_t lb = b.floor_log2();
  if (la != lb) {
    return sa > 0 ? la <=> lb : lb <=> la;
  }
  std::int64_t e = std::min(a.exponent_, b.exponent_);
  Integer ma = shifted(a.mantissa_, a.exponent_ - e);
  Integer mb = shifted(b.mantissa_, b.exponent_ - e);
  int c = cmp(ma, mb);
  return c <=> 0;
}

Dyadic div_down(const Dyadic& a, const Dyadic& b, std::int64_t precision) {
  if (b.is_zero()) throw PreconditionError("division by zero");
  return round_quotient(a.mantissa(),
                        b.mantissa(),
                        precision + a.exponent() - b.exponent(),
                        Rounding::kDown)
      .mul_2exp(a.exponent() - b.exponent());
}

Dyadic div_up(const Dyadic& a, const Dyadic& b, std::int64_t precision) {
  if (b.is_zero()) throw PreconditionError("division by zero");
  return round_quotient(a.mantissa(),
                        b.mantissa(),
                        precision + a.exponent() - b.exponent(),
                        Rounding::kUp)
      .mul_2exp(a.exponent() - b.exponent());
}

Dyadic sqrt_down(const Dyadic& x, std::int64_t precision) {
  if (x.sign() < 0) throw PreconditionError("sqrt of negative value");
  if (x.is_zero()) return {};
  // floor(sqrt(floor(x * 4^p))) / 2^p
  Integer n = shifted(x.mantissa(), x.exponent() + 2 * precision);
  return Dyadic(isqrt_floor(n), -precision);
}

Dyadic sqrt_up(const Dyadic& x, std::int64_t precision) {
  if (x.sign() < 0) throw PreconditionError("sqrt of negative value");
  if (x.is_zero()) return {};
  std::int64_t k = x.exponent() + 2 * precision;
  Integer n;
  if (k >= 0) {
    n = shifted(x.mantissa(), k);
  } else {
    mpz_cdiv_q_2exp(n.get_mpz_t(), x.mantissa().get_mpz_t(),
                    static_cast<mp_bitcnt_t>(-k));
  }
  Integer r = isqrt_floor(n);
  if (r * r < n) r += 1;
  return Dyadic(r, -precision);
}

// ---------------------------------------------------------------------------
// DyadicInterval

DyadicInterval::DyadicInterval(Dyadic point) : lo_(point), hi_(point) {}

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw PreconditionError("interval with lo > hi");
}

Dyadic DyadicInterval::mag() const { return std::max(lo_.abs(), hi_.abs()); }

Dyadic DyadicInterval::mig() const {
  if (contains_zero()) return {};
  return std::min(lo_.abs(), hi_.abs());
}

DyadicInterval DyadicInterval::sqr() const {
  Dyadic a = lo_ * lo_;
  Dyadic b = hi_ * hi_;
  if (contains_zero()) return {Dyadic(), std::max(a, b)};
  return {std::min(a, b), std::max(a, b)};
}

DyadicInterval DyadicInterval::round_outward(std::int64_t precision) const {
  return {lo_.round_down(precision), hi_.round_up(precision)};
}

DyadicInterval DyadicInterval::hull(const DyadicInterval& a,
                                    const DyadicInterval& b) {
  return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
}

DyadicInterval operator-(const DyadicInterval& a) { return {-a.hi_, -a.lo_}; }

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  if (a.lo_ == a.hi_ && b.lo_ == b.hi_) return DyadicInterval(a.lo_ * b.lo_);
  Dyadic p1 = a.lo_ * b.lo_;
  Dyadic p2 = a.lo_ * b.hi_;
  Dyadic p3 = a.hi_ * b.lo_;
  Dyadic p4 = a.hi_ * b.hi_;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

DyadicInterval interval_add(const DyadicInterval& a, const DyadicInterval& b) {
  return a + b;
}
DyadicInterval interval_mul(const DyadicInterval& a, const DyadicInterval& b) {
  return a * b;
}
DyadicInterval interval_neg(const DyadicInterval& a) { return -a; }

// ---------------------------------------------------------------------------
// ComplexBox

ComplexBox ComplexBox::point(const Dyadic& re, const Dyadic& im) {
  return {DyadicInterval(re), DyadicInterval(im)};
}

ComplexBox ComplexBox::centered(const Dyadic& re, const Dyadic& im,
                                const Dyadic& half_width) {
  return {DyadicInterval(re - half_width, re + half_width),
          DyadicInterval(im - half_width, im + half_width)};
}

Dyadic ComplexBox::half_width() const {
  return std::max(re_.width(), im_.width()).mul_2exp(-1);
}

Dyadic ComplexBox::mag_upper(std::int64_t precision) const {
  Dyadic a = re_.mag();
  Dyadic b = im_.mag();
  return sqrt_up(a * a + b * b, precision);
}

Dyadic ComplexBox::mig_lower(std::int64_t precision) const {
  Dyadic a = re_.mig();
  Dyadic b = im_.mig();
  return sqrt_down(a * a + b * b, precision);
}

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexBox divide(const ComplexBox& a, const ComplexBox& b,
                  std::int64_t precision) {
  // a / b = a * conj(b) / |b|^2, with |b|^2 bounded away from zero.
  DyadicInterval den = b.re().sqr() + b.im().sqr();
  if (den.lo().sign() <= 0) {
    throw PreconditionError("complex division by a box containing zero");
  }
  ComplexBox num = a * ComplexBox(b.re(), -b.im());
  auto scale = [&](const DyadicInterval& x) {
    // x / den for den > 0: extremes are at endpoint quotients.
    Dyadic c1 = div_down(x.lo(), x.lo().sign() >= 0 ? den.hi() : den.lo(),
                         precision);
    Dyadic c2 = div_up(x.hi(), x.hi().sign() >= 0 ? den.lo() : den.hi(),
                       precision);
    return DyadicInterval(c1, c2);
  };
  return {scale(num.re()), scale(num.im())};
}

DyadicInterval abs_interval(const ComplexBox& z, std::int64_t rho,
                            const BoxRefiner& refine) {
  if (rho < 0) throw PreconditionError("abs_interval: negative quality");
  const Dyadic target = Dyadic(1).mul_2exp(-rho);
  auto modulus = [&](const ComplexBox& b) {
    return DyadicInterval(b.mig_lower(rho + 4), b.mag_upper(rho + 4));
  };
  DyadicInterval result = modulus(z);
  if (result.width() < target) return result;
  if (!refine) {
    throw CertificationError(
        "abs_interval: box too wide for the requested quality and no "
        "refinement available");
  }
  constexpr std::int64_t kMaxQuality = std::int64_t{1} << 24;
  for (std::int64_t q = rho + 3; q <= kMaxQuality; q *= 2) {
    result = modulus(refine(q));
    if (result.width() < target) return result;
  }
  throw CertificationError("abs_interval: refinement did not converge");
}

BitMagnitude bit_magnitude(const Dyadic& x) {
  if (x.sign() <= 0) throw PreconditionError("bit_magnitude of x <= 0");
  std::int64_t fl = x.floor_log2();
  bool power_of_two = x.mantissa() == 1;
  if (fl >= 0) {
    // ceil(log2 x)
    return {static_cast<std::uint64_t>(power_of_two ? fl : fl + 1)};
  }
  // x < 1: ceil(log2(1/x)) = -floor(log2 x)
  return {static_cast<std::uint64_t>(-fl)};
}

BitMagnitude bit_magnitude(const DyadicInterval& x) {
  if (x.lo().sign() <= 0) {
    throw PreconditionError("bit_magnitude of an interval reaching 0");
  }
  return std::max(bit_magnitude(x.lo()), bit_magnitude(x.hi()));
}

}  // namespace zds
