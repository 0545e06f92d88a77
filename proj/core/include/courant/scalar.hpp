#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace courant {

/// Scalar field tag of a chart. Gaussian charts admit the imaginary unit.
enum class Field { Rational, GaussianRational };

/// Exact element of Q(i). Rational charts only ever hold values with a zero
/// imaginary part; the parser enforces that.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar fraction(long num, long den);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical sorting (real part, then imaginary).
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Canonical text: `3`, `-1/2`, `2*i`, `-i`, `(1+2*i)`, `(1/2-i)`.
  /// The parenthesised form is used whenever both parts are nonzero.
  std::string str() const;

  /// True when the printed form starts with a minus sign and can absorb it
  /// in a signed sum (used by the polynomial printer).
  bool prints_negative() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace courant
