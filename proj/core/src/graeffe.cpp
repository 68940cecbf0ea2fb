#include "splitcircle/graeffe.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

#include "splitcircle/precision.hpp"

namespace splitcircle {
namespace {

constexpr double kLog2E = 1.4426950408889634;
constexpr unsigned kBoundBits = 64;

using MultiplyFn = Poly (*)(const Poly&, const Poly&);

Poly graeffe_with(const Poly& p, MultiplyFn mul) {
  int n = p.degree();
  if (n < 1) throw std::invalid_argument("graeffe: degree must be at least 1");
  std::vector<BigComplex> even, odd;
  for (std::size_t j = 0; j < p.size(); ++j) (j % 2 == 0 ? even : odd).push_back(p[j]);
  Poly a(std::move(even));
  Poly b(std::move(odd));
  Poly q = mul(a, a) - Poly::monomial(1) * mul(b, b);
  return n % 2 == 0 ? q : -q;
}

Poly multiply_default(const Poly& a, const Poly& b) { return a * b; }

// Multiplies by a power of two so the largest coefficient part lies in [1/2, 1).
Poly normalized(const Poly& q) {
  long e = LONG_MIN;
  for (const BigComplex& z : q.coeffs()) e = std::max({e, z.re().exponent(), z.im().exponent()});
  return e == LONG_MIN ? q : q.scaled_pow2(-e);
}

BigFloat tolerance(const BigFloat& scale, double log2_factor) {
  PrecisionScope s(kBoundBits);
  return ldexp(scale, static_cast<long>(std::floor(log2_factor)));
}

struct Level {
  Poly p;
  long beta = 0;
};

// One Graeffe step of `prev` followed by the dilation 2^beta chosen by
// `scale`. The product is computed by schoolbook multiplication so that the
// rounding error of coefficient k is bounded by c 2^-bits sum_{i+j=2k}
// |a_i||a_j|. The width grows until the dilated error bound falls below
// `tol(result)`; `bits` carries the width that was finally used.
template <class ScaleFn, class TolFn>
Level certified_step(const Poly& prev, unsigned& bits, int degree, ScaleFn scale, TolFn tol) {
  int n = prev.degree();
  std::vector<BigFloat> bound(static_cast<std::size_t>(n) + 1);
  {
    PrecisionScope s(kBoundBits);
    std::vector<BigFloat> m;
    for (const BigComplex& z : prev.coeffs()) m.push_back(z.modulus_up());
    for (int i = 0; i <= n; ++i) {
      for (int j = i % 2; j <= n; j += 2) bound[static_cast<std::size_t>((i + j) / 2)] += m[i] * m[j];
    }
  }
  const BigFloat c(2.0 * (n + 4));
  for (;;) {
    bits = require_bits(bits, degree);
    Poly q;
    {
      PrecisionScope s(bits);
      q = graeffe_with(prev, multiply_schoolbook);
    }
    long beta = scale(q);
    Poly dilated = dilate_pow2(q, beta);
    BigFloat err, target;
    {
      PrecisionScope s(kBoundBits);
      for (int k = 0; k <= n; ++k) err += ldexp(bound[static_cast<std::size_t>(k)], beta * k);
      err = ldexp(err * c, -static_cast<long>(bits));
      target = tol(dilated);
    }
    if (err < target) return {normalized(dilated), beta};
    double deficit = err.log2_abs() - target.log2_abs();
    bits += static_cast<unsigned>(std::max(8.0, std::ceil(deficit) + 4));
  }
}

// Extra bits that absorb the rounding bound constant and the first-try margin.
unsigned step_bits(double log2_eps, int n) {
  return bits_for(log2_eps, 2 * (n + 4), 12);
}

void check_tau(double tau, const char* what) {
  if (!(tau > 0) || !std::isfinite(tau)) throw std::invalid_argument(std::string(what) + ": tau must be positive");
}

BigFloat modulus_ratio(const BigComplex& num, const BigComplex& den) {
  PrecisionScope s(at_least_working(128));
  return num.modulus() / den.modulus();
}

double log2_binomial(int n, int j) {
  return (std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0)) * kLog2E;
}

std::vector<double> log2_moduli(const Poly& p) {
  PrecisionScope s(kBoundBits);
  std::vector<double> y;
  y.reserve(p.size());
  for (const BigComplex& z : p.coeffs()) y.push_back(z.is_zero() ? -INFINITY : z.modulus().log2_abs());
  return y;
}

// Dilation exponent for the largest-modulus estimator:
// with b_j = a_{n-j}/a_n, the dilation by 2^beta makes |b_j| 2^{-beta j} at
// most 2^j C(n,j) for all j and at least C(n,h) for some h.
long modmax_beta(const Poly& p) {
  int n = p.degree();
  std::vector<double> y = log2_moduli(p);
  std::vector<double> lb(static_cast<std::size_t>(n) + 1, -INFINITY);
  for (int j = 1; j <= n; ++j) lb[j] = y[n - j] - y[n] - log2_binomial(n, j);
  long beta = LONG_MIN;
  for (int j = 1; j <= n; ++j) {
    if (std::isfinite(lb[j])) beta = std::max(beta, static_cast<long>(std::floor(lb[j] / j)));
  }
  constexpr double slack = 1e-9;
  for (int iter = 0; iter < 64; ++iter) {
    bool upper = true, lower = false;
    for (int j = 1; j <= n; ++j) {
      if (!std::isfinite(lb[j])) continue;
      double v = lb[j] - static_cast<double>(beta) * j;
      if (v > j + slack) upper = false;
      if (v >= -slack) lower = true;
    }
    if (upper && lower) break;
    beta += upper ? -1 : 1;
  }
  return beta;
}

}  // namespace

Poly graeffe(const Poly& p) { return graeffe_with(p, multiply_default); }

int nrd(const Poly& p, const BigFloat& radius, double tau) {
  int n = p.degree();
  if (n < 1) throw std::invalid_argument("nrd: degree must be at least 1");
  check_tau(tau, "nrd");
  if (!(radius > BigFloat(0L))) throw std::invalid_argument("nrd: radius must be positive");
  if (n == 1) return modulus_ratio(p[0], p[1]) < radius ? 1 : 0;

  auto log2_eps = [n](double t) {
    return -4.0 * n + n * std::log2(t) - 1.5 * n * t * kLog2E;
  };
  // Per-coefficient relative error of the dilation stays below eps_0 / (2(n+1)).
  unsigned bits = require_bits(bits_for(log2_eps(tau), 4 * (n + 1) * (n + 2), 8), n);
  Poly cur;
  {
    PrecisionScope s(bits);
    cur = normalized(dilate(p, radius));
  }
  const double target = std::log(2.0 * n);
  double t = tau;
  unsigned carry = 0;
  while (0.75 * t < target) {
    t *= 1.5;
    double le = log2_eps(t);
    unsigned b = step_bits(le, n) + carry;
    unsigned first = b;
    Level next = certified_step(
        cur, b, n, [](const Poly&) { return 0L; },
        [le](const Poly& q) { return tolerance(l1_norm(q), le - 1); });
    carry += b - first;
    cur = std::move(next.p);
  }
  int best = 0;
  BigFloat best_norm = cur[0].norm();
  for (int i = 1; i <= n; ++i) {
    BigFloat v = cur[static_cast<std::size_t>(i)].norm();
    if (v > best_norm) {
      best = i;
      best_norm = std::move(v);
    }
  }
  return best;
}

std::vector<int> lower_convex_envelope(std::span<const EnvelopePoint> points) {
  std::vector<EnvelopePoint> pts;
  for (const EnvelopePoint& p : points) {
    if (std::isfinite(p.y)) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const EnvelopePoint& a, const EnvelopePoint& b) { return a.j < b.j; });
  std::vector<EnvelopePoint> hull;
  for (const EnvelopePoint& c : pts) {
    while (hull.size() >= 2) {
      const EnvelopePoint& a = hull[hull.size() - 2];
      const EnvelopePoint& b = hull.back();
      double cross = (b.j - a.j) * (c.y - a.y) - (b.y - a.y) * (c.j - a.j);
      if (cross < 0) break;
      hull.pop_back();
    }
    hull.push_back(c);
  }
  std::vector<int> corners;
  corners.reserve(hull.size());
  for (const EnvelopePoint& p : hull) corners.push_back(p.j);
  return corners;
}

EnvelopeScaling envelope_scaling(const Poly& p, int k) {
  int n = p.degree();
  if (k < 1 || k > n) throw std::invalid_argument("envelope_scaling: k out of range");
  if (p[0].is_zero()) throw std::invalid_argument("envelope_scaling: P(0) must be nonzero");
  std::vector<double> y = log2_moduli(p);
  std::vector<EnvelopePoint> pts;
  for (int j = 0; j <= n; ++j) pts.push_back({j, y[j]});
  std::vector<int> corners = lower_convex_envelope(pts);
  EnvelopeScaling s;
  for (int c : corners) {
    if (c < k) s.ell = c;
  }
  s.h = *std::find_if(corners.begin(), corners.end(), [k](int c) { return c >= k; });
  s.beta = static_cast<long>(std::floor((y[s.ell] - y[s.h]) / (s.h - s.ell) + 0.5));
  s.rho = BigFloat::pow2(s.beta);
  return s;
}

ModulusEstimate mod_k(const Poly& p, int k, double tau) {
  if (k < 1 || k > p.degree()) throw std::invalid_argument("mod_k: k out of range");
  check_tau(tau, "mod_k");
  int zeros = 0;
  Poly q = strip_zero_roots(p, &zeros);
  if (k <= zeros) return {BigFloat(0L), tau};
  k -= zeros;
  int n = q.degree();
  if (n == 1) return {modulus_ratio(q[0], q[1]), tau};

  auto log2_eps = [n](double t) {
    return -(n + 1.0) - n * std::log2(3.0 * n) + n * std::log2(t) - 1.5 * n * t * kLog2E;
  };
  int levels = 0;
  while (std::ldexp(std::log(3.0 * n), -levels) >= tau / 2) ++levels;

  double t = tau / 8;
  EnvelopeScaling s0 = envelope_scaling(q, k);
  std::vector<long> betas{s0.beta};
  Poly cur = round_rel(normalized(dilate_pow2(q, s0.beta)), BigFloat::pow2(static_cast<long>(std::floor(log2_eps(t))) - 1));
  unsigned carry = 0;
  for (int m = 1; m <= levels; ++m) {
    t *= 1.5;
    double le = log2_eps(t);
    unsigned b = step_bits(le, n) + carry;
    unsigned first = b;
    Level next = certified_step(
        cur, b, p.degree(), [k](const Poly& g) { return envelope_scaling(g, k).beta; },
        [le](const Poly& g) { return tolerance(l1_norm(g), le - 1); });
    carry += b - first;
    betas.push_back(next.beta);
    cur = std::move(next.p);
  }
  PrecisionScope s(at_least_working(128) + static_cast<unsigned>(levels));
  BigFloat e(0L);
  for (std::size_t m = 0; m < betas.size(); ++m) e += ldexp(BigFloat(betas[m]), -static_cast<long>(m));
  return {exp2(e), tau};
}

ModulusEstimate mod_max(const Poly& p, double tau) {
  int n = p.degree();
  if (n < 1) throw std::invalid_argument("mod_max: degree must be at least 1");
  check_tau(tau, "mod_max");
  bool all_zero = true;
  for (int j = 0; j < n; ++j) all_zero = all_zero && p[static_cast<std::size_t>(j)].is_zero();
  if (all_zero) return {BigFloat(0L), tau};
  if (n == 1) return {modulus_ratio(p[0], p[1]), tau};

  // |P - P^| < |lead| tau^n e^{-n tau} in absolute terms.
  auto log2_factor = [n](double t) { return n * std::log2(t) - n * t * kLog2E; };
  int levels = 0;
  while (std::ldexp(std::log(4.0 * n), -levels) >= tau / 2) ++levels;

  double t = tau / 8;
  long beta0 = modmax_beta(p);
  std::vector<long> betas{beta0};
  Poly scaled = normalized(dilate_pow2(p, beta0));
  double rel;
  {
    PrecisionScope s(kBoundBits);
    rel = scaled.leading().modulus().log2_abs() - l1_norm(scaled).log2_abs() + log2_factor(t);
  }
  Poly cur = round_rel(scaled, BigFloat::pow2(static_cast<long>(std::floor(rel)) - 1));
  unsigned carry = 0;
  for (int m = 1; m <= levels; ++m) {
    t *= 1.5;
    double lf = log2_factor(t);
    unsigned b = step_bits(lf - n * std::log2(3.0), n) + carry;
    unsigned first = b;
    Level next = certified_step(
        cur, b, n, [](const Poly& g) { return modmax_beta(g); },
        [lf](const Poly& g) { return tolerance(g.leading().modulus(), lf - 1); });
    carry += b - first;
    betas.push_back(next.beta);
    cur = std::move(next.p);
  }
  PrecisionScope s(at_least_working(128) + static_cast<unsigned>(levels));
  BigFloat e(0L);
  for (std::size_t m = 0; m < betas.size(); ++m) e += ldexp(BigFloat(betas[m]), -static_cast<long>(m));
  return {exp2(e), tau};
}

ModulusEstimate mod_min(const Poly& p, double tau) {
  if (p.degree() < 1) throw std::invalid_argument("mod_min: degree must be at least 1");
  check_tau(tau, "mod_min");
  if (p[0].is_zero()) return {BigFloat(0L), tau};
  ModulusEstimate r = mod_max(reciprocal(p), tau);
  PrecisionScope s(at_least_working(r.value.precision()));
  return {BigFloat(1L) / r.value, tau};
}

}  // namespace splitcircle
