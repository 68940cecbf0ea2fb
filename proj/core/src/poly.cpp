#include "splitcircle/poly.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "splitcircle/errors.hpp"
#include "splitcircle/fft.hpp"
#include "splitcircle/precision.hpp"

namespace splitcircle {

Poly::Poly(std::vector<BigComplex> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<BigComplex> coeffs) : c_(coeffs) { normalize(); }

Poly Poly::monomial(int k, BigComplex c) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  std::vector<BigComplex> v(static_cast<std::size_t>(k) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const BigComplex> roots, const BigComplex& lead) {
  // Multiply in (x - r) one root at a time: c_j <- c_{j-1} - r c_j.
  std::vector<BigComplex> c{lead};
  c.reserve(roots.size() + 1);
  for (const BigComplex& r : roots) {
    c.emplace_back();
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - r * c[j];
    c[0] = -(r * c[0]);
  }
  return Poly(std::move(c));
}

BigComplex Poly::coeff(int j) const {
  if (j < 0 || j > degree()) return BigComplex();
  return c_[static_cast<std::size_t>(j)];
}

unsigned Poly::precision() const noexcept {
  unsigned bits = 0;
  for (const BigComplex& z : c_) bits = std::max(bits, z.precision());
  return bits;
}

Poly Poly::rounded(unsigned bits) const {
  std::vector<BigComplex> v;
  v.reserve(c_.size());
  for (const BigComplex& z : c_) v.emplace_back(z, bits);
  return Poly(std::move(v));
}

Poly Poly::scaled_pow2(long e) const {
  std::vector<BigComplex> v;
  v.reserve(c_.size());
  for (const BigComplex& z : c_) v.push_back(ldexp(z, e));
  return Poly(std::move(v));
}

const Poly& Poly::require_finite(const char* what) const {
  for (const BigComplex& z : c_) {
    if (!z.is_finite()) throw ExponentOverflow(std::string(what) + ": coefficient left the exponent range");
  }
  return *this;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  normalize();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(a);
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r(a);
  r -= b;
  return r;
}

Poly operator-(const Poly& a) {
  std::vector<BigComplex> v;
  v.reserve(a.size());
  for (const BigComplex& z : a.coeffs()) v.push_back(-z);
  return Poly(std::move(v));
}

Poly multiply_schoolbook(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigComplex> v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j].add_product(a[i], b[j]);
  }
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (std::min(a.degree(), b.degree()) > kFftMultiplyThreshold) return multiply_fft(a, b);
  return multiply_schoolbook(a, b);
}

Poly operator*(const Poly& a, const BigComplex& s) {
  std::vector<BigComplex> v;
  v.reserve(a.size());
  for (const BigComplex& z : a.coeffs()) v.push_back(z * s);
  return Poly(std::move(v));
}

Poly operator*(const BigComplex& s, const Poly& a) { return a * s; }

bool operator==(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] == b[j])) return false;
  }
  return true;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigComplex> v;
  v.reserve(p.size() - 1);
  for (std::size_t j = 1; j < p.size(); ++j) v.push_back(p[j] * BigFloat(static_cast<long>(j)));
  return Poly(std::move(v));
}

BigFloat l1_norm(const Poly& p) {
  BigFloat s(0L);
  for (const BigComplex& z : p.coeffs()) s = add_up(s, z.modulus_up());
  return s;
}

BigComplex eval(const Poly& p, const BigComplex& z) {
  if (p.is_zero()) return BigComplex(0);
  BigComplex acc = p.leading();
  for (int j = p.degree() - 1; j >= 0; --j) {
    acc *= z;
    acc += p[static_cast<std::size_t>(j)];
  }
  return acc;
}

namespace {

// Exact binomial coefficient rounded to the working precision.
BigFloat binomial(unsigned long n, unsigned long k) {
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, n, k);
  BigFloat r;
  mpfr_set_z(r.raw(), z, MPFR_RNDN);
  mpz_clear(z);
  return r;
}

std::vector<BigComplex> powers(const BigComplex& u, int n) {
  std::vector<BigComplex> pw;
  pw.reserve(static_cast<std::size_t>(n) + 1);
  pw.emplace_back(1);
  for (int j = 1; j <= n; ++j) pw.push_back(pw.back() * u);
  return pw;
}

// (x + u)^m by the binomial theorem.
Poly binomial_power(const BigComplex& u, int m) {
  std::vector<BigComplex> pw = powers(u, m);
  std::vector<BigComplex> v;
  v.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    v.push_back(pw[static_cast<std::size_t>(m - k)] *
                binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)));
  }
  return Poly(std::move(v));
}

}  // namespace

Poly shift_convolution(const Poly& p, const BigComplex& u) {
  int n = p.degree();
  if (n < 1 || u.is_zero()) return p;
  std::vector<BigComplex> pw = powers(u, n);
  std::vector<BigComplex> q(static_cast<std::size_t>(n) + 1);
  // q_k = sum_{j >= k} a_j C(j, k) u^{j-k}
  for (int j = 0; j <= n; ++j) {
    const BigComplex& a = p[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    for (int k = 0; k <= j; ++k) {
      BigComplex t = a * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k));
      q[static_cast<std::size_t>(k)].add_product(t, pw[static_cast<std::size_t>(j - k)]);
    }
  }
  // The leading coefficient is carried over exactly.
  q.back() = p.leading();
  return Poly(std::move(q));
}

Poly shift_divide_conquer(const Poly& p, const BigComplex& u) {
  int n = p.degree();
  if (n <= kShiftConvolutionMaxDegree) return shift_convolution(p, u);
  int m = (n + 1) / 2;
  auto cs = p.coeffs();
  Poly lo(std::vector<BigComplex>(cs.begin(), cs.begin() + m));
  Poly hi(std::vector<BigComplex>(cs.begin() + m, cs.end()));
  Poly r = shift_divide_conquer(lo, u) + binomial_power(u, m) * shift_divide_conquer(hi, u);
  std::vector<BigComplex> v(r.coeffs().begin(), r.coeffs().end());
  v.resize(static_cast<std::size_t>(n) + 1);
  v.back() = p.leading();
  return Poly(std::move(v));
}

Poly shift(const Poly& p, const BigComplex& u) {
  if (p.degree() <= kShiftConvolutionMaxDegree) return shift_convolution(p, u);
  return shift_divide_conquer(p, u);
}

Poly dilate(const Poly& p, const BigFloat& rho) {
  if (!(rho > BigFloat(0L))) throw std::invalid_argument("dilate: rho must be positive");
  std::vector<BigComplex> v;
  v.reserve(p.size());
  BigFloat f(1L);
  for (std::size_t j = 0; j < p.size(); ++j) {
    v.push_back(p[j] * f);
    f *= rho;
  }
  Poly r(std::move(v));
  r.require_finite("dilate");
  return r;
}

Poly dilate_pow2(const Poly& p, long beta) {
  std::vector<BigComplex> v;
  v.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) v.push_back(ldexp(p[j], beta * static_cast<long>(j)));
  Poly r(std::move(v));
  r.require_finite("dilate_pow2");
  return r;
}

Poly strip_zero_roots(const Poly& p, int* multiplicity) {
  std::size_t v = 0;
  while (v < p.size() && p[v].is_zero()) ++v;
  if (multiplicity) *multiplicity = static_cast<int>(v);
  if (v == 0) return p;
  return Poly(std::vector<BigComplex>(p.coeffs().begin() + static_cast<long>(v), p.coeffs().end()));
}

Poly reversed(const Poly& p, int d) {
  if (d < p.degree()) throw std::invalid_argument("reversed: d below degree");
  std::vector<BigComplex> v(static_cast<std::size_t>(d) + 1);
  for (std::size_t j = 0; j < p.size(); ++j) v[static_cast<std::size_t>(d) - j] = p[j];
  return Poly(std::move(v));
}

Poly reciprocal(const Poly& p) {
  if (p.is_zero()) return {};
  return reversed(p, p.degree());
}

unsigned round_rel_bits(int degree, double log2_eps) noexcept {
  if (log2_eps >= 0) return kMinPrecisionBits;
  // Per-coefficient relative error eps / (2(n+1)).
  double need = -log2_eps + std::log2(2.0 * (degree + 1)) + 1;
  return std::max(kMinPrecisionBits, static_cast<unsigned>(std::ceil(need)));
}

Poly round_rel(const Poly& p, const BigFloat& eps) {
  if (p.is_zero()) throw std::invalid_argument("round_rel: zero polynomial");
  if (!(eps > BigFloat(0L))) throw std::invalid_argument("round_rel: eps must be positive");
  unsigned bits = round_rel_bits(p.degree(), eps.log2_abs());
  for (;;) {
    Poly r = p.rounded(bits);
    PrecisionScope check(std::max(p.precision(), bits) * 2 + 64);
    if (l1_norm(p - r) < eps * l1_norm(r)) return r;
    bits += 8;
  }
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  int n = a.degree();
  int m = b.degree();
  if (n < m) return {Poly(), a};
  std::vector<BigComplex> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<BigComplex> q(static_cast<std::size_t>(n - m) + 1);
  BigComplex inv_lead = BigComplex(1) / b.leading();
  for (int k = n - m; k >= 0; --k) {
    auto top = static_cast<std::size_t>(k + m);
    BigComplex c = r[top] * inv_lead;
    for (int j = 0; j < m; ++j) r[static_cast<std::size_t>(k + j)].sub_product(c, b[static_cast<std::size_t>(j)]);
    r[top] = BigComplex();
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  r.resize(static_cast<std::size_t>(m));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("mulmod: modulus must have degree >= 1");
  return divrem(a * b, f).remainder;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << "[";
  for (std::size_t j = 0; j < p.size(); ++j) os << (j ? ", " : "") << p[j];
  return os << "]";
}

}  // namespace splitcircle
