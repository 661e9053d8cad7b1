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

// Exact integers, dyadic numbers and outward-rounded dyadic interval / box
// arithmetic. Every value here is immutable once built.

#ifndef ZDSOLVE_NUMERICS_HPP_
#define ZDSOLVE_NUMERICS_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace zds {

using Integer = mpz_class;
using Rational = mpq_class;

/// Number of bits of |x| (0 for x = 0).
std::int64_t bit_length(const Integer& x);

/// Smallest k >= 0 with 2^k >= x, for x >= 1.
std::int64_t ceil_log2(const Integer& x);
std::int64_t ceil_log2(const Rational& x);

/// Smallest power of two >= x (x >= 1).
Integer next_pow2(const Integer& x);

/// mantissa * 2^exponent, kept canonical: the mantissa is odd, or the value is
/// zero with exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value);  // NOLINT(google-explicit-constructor)
  explicit Dyadic(Integer mantissa, std::int64_t exponent = 0);

  /// floor(q * 2^precision) / 2^precision, resp. the ceiling / nearest variant.
  static Dyadic round_down(const Rational& q, std::int64_t precision);
  static Dyadic round_up(const Rational& q, std::int64_t precision);
  static Dyadic round_nearest(const Rational& q, std::int64_t precision);

  /// Parses the "m*2^e" serialization.
  static Dyadic parse(const std::string& text);

  const Integer& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sign() == 0; }

  /// floor(log2 |x|); x must be nonzero.
  std::int64_t floor_log2() const;

  Dyadic abs() const { return sign() < 0 ? -*this : *this; }
  Dyadic mul_2exp(std::int64_t k) const;
  Dyadic round_down(std::int64_t precision) const;
  Dyadic round_up(std::int64_t precision) const;
  Dyadic round_nearest(std::int64_t precision) const;

  Rational to_rational() const;
  double to_double() const;
  std::string to_string() const;

  friend Dyadic operator-(const Dyadic& a);
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  Integer mantissa_{0};
  std::int64_t exponent_ = 0;
};

/// floor / ceil of (a / b) on the grid 2^-precision. b must be nonzero.
Dyadic div_down(const Dyadic& a, const Dyadic& b, std::int64_t precision);
Dyadic div_up(const Dyadic& a, const Dyadic& b, std::int64_t precision);
/// floor / ceil of sqrt(x) on the grid 2^-precision; x >= 0.
Dyadic sqrt_down(const Dyadic& x, std::int64_t precision);
Dyadic sqrt_up(const Dyadic& x, std::int64_t precision);

/// Closed interval [lo, hi] with dyadic endpoints.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  DyadicInterval(Dyadic point);  // NOLINT(google-explicit-constructor)
  DyadicInterval(Dyadic lo, Dyadic hi);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }

  Dyadic width() const { return hi_ - lo_; }
  Dyadic midpoint() const { return (lo_ + hi_).mul_2exp(-1); }
  /// max |x| over the interval.
  Dyadic mag() const;
  /// min |x| over the interval.
  Dyadic mig() const;

  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool intersects(const DyadicInterval& o) const {
    return !(hi_ < o.lo_ || o.hi_ < lo_);
  }

  DyadicInterval sqr() const;
  DyadicInterval round_outward(std::int64_t precision) const;
  static DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);

  friend DyadicInterval operator-(const DyadicInterval& a);
  friend DyadicInterval operator+(const DyadicInterval& a,
                                  const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a,
                                  const DyadicInterval& b);
  friend DyadicInterval operator*(const DyadicInterval& a,
                                  const DyadicInterval& b);
  friend bool operator==(const DyadicInterval& a,
                         const DyadicInterval& b) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

DyadicInterval interval_add(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval interval_mul(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval interval_neg(const DyadicInterval& a);

/// Axis-aligned box in the complex plane; the concrete form of an isolating
/// disk (a disk of radius r is carried by the box of half-width r).
class ComplexBox {
 public:
  ComplexBox() = default;
  ComplexBox(DyadicInterval re, DyadicInterval im)
      : re_(std::move(re)), im_(std::move(im)) {}
  static ComplexBox point(const Dyadic& re, const Dyadic& im = Dyadic());
  static ComplexBox centered(const Dyadic& re, const Dyadic& im,
                             const Dyadic& half_width);

  const DyadicInterval& re() const { return re_; }
  const DyadicInterval& im() const { return im_; }

  /// max of the two component half-widths.
  Dyadic half_width() const;
  bool contains(const Dyadic& re, const Dyadic& im) const {
    return re_.contains(re) && im_.contains(im);
  }
  bool contains_zero() const {
    return re_.contains_zero() && im_.contains_zero();
  }
  bool intersects(const ComplexBox& o) const {
    return re_.intersects(o.re_) && im_.intersects(o.im_);
  }
  /// Upper bound on |z| over the box, on the grid 2^-precision.
  Dyadic mag_upper(std::int64_t precision) const;
  /// Lower bound on |z| over the box, on the grid 2^-precision.
  Dyadic mig_lower(std::int64_t precision) const;

  ComplexBox scale(const DyadicInterval& k) const {
    return {re_ * k, im_ * k};
  }
  ComplexBox round_outward(std::int64_t precision) const {
    return {re_.round_outward(precision), im_.round_outward(precision)};
  }

  friend ComplexBox operator-(const ComplexBox& a) { return {-a.re_, -a.im_}; }
  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
  friend bool operator==(const ComplexBox& a, const ComplexBox& b) = default;

 private:
  DyadicInterval re_;
  DyadicInterval im_;
};

/// Enclosure of a / b with endpoints rounded outward to 2^-precision. The box
/// b must exclude 0.
ComplexBox divide(const ComplexBox& a, const ComplexBox& b,
                  std::int64_t precision);

/// Returns a box of half-width < 2^-quality enclosing the same complex value.
using BoxRefiner = std::function<ComplexBox(std::int64_t quality)>;

/// Interval containing |z| for every z in the box, of width < 2^-rho. When the
/// box is too wide, `refine` is asked for tighter boxes on a doubling schedule;
/// without a refiner a CertificationError is thrown.
DyadicInterval abs_interval(const ComplexBox& z, std::int64_t rho,
                            const BoxRefiner& refine = {});

/// B_x = log max{1,x} + log max{1,1/x} in whole bits.
struct BitMagnitude {
  std::uint64_t value = 0;
  friend auto operator<=>(const BitMagnitude&, const BitMagnitude&) = default;
};

/// ceil(log max{1,x}) + ceil(log max{1,1/x}); x > 0.
BitMagnitude bit_magnitude(const Dyadic& x);
/// Upper bound of B_x over x in the interval; requires lo > 0.
BitMagnitude bit_magnitude(const DyadicInterval& x);

}  // namespace zds

#endif  // ZDSOLVE_NUMERICS_HPP_
