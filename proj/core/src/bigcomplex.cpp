#include "splitcircle/bigcomplex.hpp"

#include <ostream>

namespace splitcircle {

BigComplex BigComplex::unit_root(long m, long n) {
  // Reduce the angle exactly before touching transcendental functions.
  m %= n;
  if (m < 0) m += n;
  if (m == 0) return {BigFloat(1L), BigFloat(0L)};
  if (2 * m == n) return {BigFloat(-1L), BigFloat(0L)};
  if (4 * m == n) return {BigFloat(0L), BigFloat(1L)};
  if (4 * m == 3 * n) return {BigFloat(0L), BigFloat(-1L)};
  BigFloat theta;
  mpfr_const_pi(theta.raw(), MPFR_RNDN);
  mpfr_mul_si(theta.raw(), theta.raw(), 2 * m, MPFR_RNDN);
  mpfr_div_si(theta.raw(), theta.raw(), n, MPFR_RNDN);
  BigComplex z;
  mpfr_sin_cos(z.im_.raw(), z.re_.raw(), theta.raw(), MPFR_RNDN);
  return z;
}

BigComplex BigComplex::polar(const BigFloat& modulus, const BigFloat& theta) {
  BigComplex z;
  mpfr_sin_cos(z.im_.raw(), z.re_.raw(), theta.raw(), MPFR_RNDN);
  z.re_ *= modulus;
  z.im_ *= modulus;
  return z;
}

BigFloat BigComplex::modulus() const { return hypot(re_, im_); }

BigFloat BigComplex::modulus_up() const {
  BigFloat r;
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDU);
  return r;
}

BigFloat BigComplex::norm() const {
  BigFloat r;
  mpfr_fmma(r.raw(), re_.raw(), re_.raw(), im_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::conj() const { return {re_, -im_}; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  *this = *this / o;
  return *this;
}

void BigComplex::add_product(const BigComplex& a, const BigComplex& b) {
  BigComplex p = a * b;
  *this += p;
}

void BigComplex::sub_product(const BigComplex& a, const BigComplex& b) {
  BigComplex p = a * b;
  *this -= p;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re() - b.re(), a.im() - b.im()};
}

BigComplex operator-(const BigComplex& a) { return {-a.re(), -a.im()}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigFloat re, im;
  // One rounding per part.
  mpfr_fmms(re.raw(), a.re().raw(), b.re().raw(), a.im().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fmma(im.raw(), a.re().raw(), b.im().raw(), a.im().raw(), b.re().raw(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

BigComplex operator*(const BigComplex& a, const BigFloat& s) {
  return {a.re() * s, a.im() * s};
}

BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.im().is_zero()) return {a.re() / b.re(), a.im() / b.re()};
  // Scale by a power of two so |b| ~ 1 before forming the squared norm.
  long e = std::max(b.re().exponent(), b.im().exponent());
  BigComplex bs = ldexp(b, -e);
  BigFloat d = bs.norm();
  BigComplex q = a * bs.conj();
  return ldexp(BigComplex(q.re() / d, q.im() / d), -e);
}

BigComplex operator/(const BigComplex& a, const BigFloat& s) {
  return {a.re() / s, a.im() / s};
}

bool operator==(const BigComplex& a, const BigComplex& b) {
  return a.re() == b.re() && a.im() == b.im();
}

BigComplex ldexp(const BigComplex& z, long e) {
  return {ldexp(z.re(), e), ldexp(z.im(), e)};
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << "(" << z.re() << ", " << z.im() << ")";
}

}  // namespace splitcircle
