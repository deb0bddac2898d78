#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <complex>
#include <string>
#include <string_view>

namespace hypermoment {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p" or a finite decimal such as "-0.125" into an exact
// rational. Throws UsageError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Exact Gaussian rational re + i·im.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : re_(value) {}
  Scalar(long value) : re_(value) {}
  Scalar(const Rational& re) : re_(re) {}
  Scalar(Rational&& re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  // |re| + |im|; an exact size measure used for residuals.
  Rational norm1() const { return abs(re_) + abs(im_); }
  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im). Only used to give containers a total order.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Rational re_;
  Rational im_;
};

// "p/q" for reals, "a+bi" style otherwise.
std::string to_string(const Scalar& s);

// Accepts the same forms as parse_rational plus "a+bi", "a-bi", "bi".
Scalar parse_scalar(std::string_view text);

// Relative-tolerance comparison used by the floating evaluation layer.
struct FloatPolicy {
  double tolerance = 1e-9;
};

inline double relative_residual(std::complex<double> a,
                                std::complex<double> b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

}  // namespace hypermoment
