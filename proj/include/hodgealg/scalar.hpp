#pragma once

// Exact scalars: arbitrary-precision rationals, Gaussian rationals Q(i) and
// the Gaussian integers Z[i] used by fraction-free elimination.

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace hodgealg {

/// Always canonical (reduced, positive denominator) as long as it is built
/// through the helpers below or through gmpxx arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit embedding Q -> Q(i)
  GaussRational(long re) : re_(re) {}                 // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

GaussRational parse_gauss(std::string_view text);
std::string to_string(const GaussRational& z);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// i^e for any integer exponent.
GaussRational i_power(long e);

/// Gaussian integer a+bi. Only exact division is supported.
struct GaussInt {
  Integer re{0};
  Integer im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

/// Exact quotient; throws std::logic_error if b does not divide a.
GaussInt exact_div(const GaussInt& a, const GaussInt& b);
Integer exact_div(const Integer& a, const Integer& b);

// Field traits so templated kernels can treat Q and Q(i) uniformly.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  using Ring = Integer;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational conj(const Rational& x) { return x; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  /// Common denominator of the coordinates (positive integer).
  static void accumulate_denominator(Integer& lcm_acc, const Rational& x);
  static Integer to_ring(const Rational& x, const Integer& scale);
  static Rational from_ring(const Integer& x) { return Rational(x); }
  static std::string format(const Rational& x) { return to_string(x); }
};

template <>
struct FieldTraits<GaussRational> {
  using Ring = GaussInt;
  static bool is_zero(const GaussRational& x) { return x.is_zero(); }
  static GaussRational conj(const GaussRational& x) { return x.conj(); }
  static GaussRational zero() { return {}; }
  static GaussRational one() { return GaussRational(1); }
  static void accumulate_denominator(Integer& lcm_acc, const GaussRational& x);
  static GaussInt to_ring(const GaussRational& x, const Integer& scale);
  static GaussRational from_ring(const GaussInt& x) { return {Rational(x.re), Rational(x.im)}; }
  static std::string format(const GaussRational& x) { return to_string(x); }
};

inline bool ring_is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const GaussInt& x) { return x.is_zero(); }

}  // namespace hodgealg
