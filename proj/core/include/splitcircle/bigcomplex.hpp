#pragma once

#include <iosfwd>
#include <utility>

#include "splitcircle/bigfloat.hpp"

namespace splitcircle {

/// Complex number with BigFloat parts. Value semantics; arithmetic follows
/// the working-precision rules of BigFloat.
class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigFloat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(double re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  BigComplex(double re, double im) : re_(re), im_(im) {}
  BigComplex(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  /// Copy rounded to `bits`.
  BigComplex(const BigComplex& z, unsigned bits) : re_(z.re_, bits), im_(z.im_, bits) {}
  BigComplex(const BigComplex&) = default;
  BigComplex(BigComplex&&) noexcept = default;
  BigComplex& operator=(const BigComplex&) = default;
  BigComplex& operator=(BigComplex&&) noexcept = default;

  static BigComplex i() { return {BigFloat(0L), BigFloat(1L)}; }
  /// e^{2 pi i m / n}.
  static BigComplex unit_root(long m, long n);
  /// e^{i theta}.
  static BigComplex polar(const BigFloat& modulus, const BigFloat& theta);

  const BigFloat& re() const noexcept { return re_; }
  const BigFloat& im() const noexcept { return im_; }
  BigFloat& re() noexcept { return re_; }
  BigFloat& im() noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }
  unsigned precision() const noexcept {
    return re_.precision() > im_.precision() ? re_.precision() : im_.precision();
  }

  /// |z| at working precision, round-to-nearest.
  BigFloat modulus() const;
  /// |z| rounded toward +infinity.
  BigFloat modulus_up() const;
  /// re^2 + im^2.
  BigFloat norm() const;
  BigComplex conj() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& s);
  BigComplex& operator/=(const BigComplex& o);

  /// this += a * b, reusing this value's storage.
  void add_product(const BigComplex& a, const BigComplex& b);
  /// this -= a * b.
  void sub_product(const BigComplex& a, const BigComplex& b);

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& s);
BigComplex operator*(const BigFloat& s, const BigComplex& a);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigFloat& s);
bool operator==(const BigComplex& a, const BigComplex& b);

/// Multiplication by 2^e, exact.
BigComplex ldexp(const BigComplex& z, long e);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace splitcircle
