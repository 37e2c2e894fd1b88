#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace liecoh {

using Rational = mpq_class;

/// Exact Gaussian rational re + im*i with arbitrary-precision components.
///
/// Components are always kept in canonical form (reduced, positive
/// denominator), so equality is plain component comparison.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im = 0);

  static Scalar i() { return Scalar(0, 1); }

  /// Parses `a/b`, `a/b+c/d*i`, `i`, `-3*i`, ... (whitespace ignored).
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this -= a*b without materialising the product for real operands.
  void sub_mul(const Scalar& a, const Scalar& b);
  /// this += a*b
  void add_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: `2`, `-1/2`, `i`, `3/4*i`, `1/2-3*i`.
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace liecoh
