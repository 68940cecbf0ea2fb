#include "splitcircle/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "splitcircle/errors.hpp"
#include "splitcircle/graeffe.hpp"
#include "splitcircle/precision.hpp"

namespace splitcircle {

namespace {

thread_local CtrTrace* t_ctr_trace = nullptr;

constexpr double kLn2 = 0.6931471805599453;
constexpr double kCenterTau = 0.01;
constexpr double kOuterTau = 0.05;

BigFloat pow2_real(double e) { return exp2(BigFloat(e)); }

// Width that leaves 2^log2_tol after `extra` bits of cancellation.
unsigned width(double log2_tol, int n, double extra = 0) {
  double b = std::ceil(-log2_tol + std::max(extra, 0.0) + 2.0 * std::log2(n + 2.0) + 24);
  return require_bits(at_least_working(static_cast<unsigned>(std::max(b, 0.0))), n);
}

double log2_norm(const Poly& p) { return l1_norm(p).log2_abs(); }

// F(x) = s^k F1(x / s) and G(x) = s^g_exp G1(x / s).
void undilate(Poly& f, Poly& g, const BigFloat& s, long g_exp) {
  BigFloat inv = BigFloat(1L) / s;
  f = dilate(f, inv) * BigComplex(pow(s, f.degree()));
  g = dilate(g, inv) * BigComplex(pow(s, g_exp));
}

FactorPair checked(const Poly& p, Poly f, Poly g, const BigFloat& eps, const char* what) {
  BigFloat r = pair_residual(p, f, g);
  if (!(r < eps)) {
    throw SplitFailed(std::string(what) + ": residual 2^" + std::to_string(r.log2_abs()) + " above eps 2^" +
                      std::to_string(eps.log2_abs()));
  }
  return {std::move(f), std::move(g), std::move(r)};
}

}  // namespace

void record_ctr_budget(const CtrBudget& b) {
  if (t_ctr_trace) t_ctr_trace->budgets_.push_back(b);
}

CtrTrace::CtrTrace() { t_ctr_trace = this; }
CtrTrace::~CtrTrace() { t_ctr_trace = nullptr; }

SplitCircle rad(const Poly& p, const Annulus& ann) {
  const int n = p.degree();
  if (ann.i < 1 || ann.i > ann.j || ann.j > n - 1) throw std::invalid_argument("rad: need 1 <= i <= j <= n - 1");
  if (!(ann.r > BigFloat(0L)) || !(ann.r < ann.R)) throw std::invalid_argument("rad: need 0 < r < R");
  BigFloat r = ann.r;
  BigFloat R = ann.R;
  int i = ann.i;
  int j = ann.j;
  for (;;) {
    const double width_log = (R.log2_abs() - r.log2_abs()) * kLn2;
    if (i == j) {
      const double t = width_log / 8;
      BigFloat m = mod_k(p, i, t).value;
      BigFloat M = mod_k(p, i + 1, t).value;
      if (m.is_zero()) throw std::domain_error("rad: zero root below the annulus");
      const double half = 0.5 * (M.log2_abs() - m.log2_abs()) * kLn2;
      return {sqrt(m * M), i, half - t};
    }
    BigFloat rho = sqrt(r * R);
    const double delta = width_log / (8.0 * (j - i));
    const int k = nrd(p, rho, delta);
    const BigFloat e = exp(BigFloat(delta));
    if (2 * k < i + j || (2 * k == i + j && 2 * k < n)) {
      R = rho / e;
      j = k;
    } else {
      r = rho * e;
      i = k;
    }
  }
}

FactorPair hom(const Poly& p, const Annulus& ann, const BigFloat& eps) {
  const int n = p.degree();
  if (!(eps > BigFloat(0L)) || !(eps < BigFloat(1L))) throw std::invalid_argument("hom: need 0 < eps < 1");
  const SplitCircle sc = rad(p, ann);
  const double l2eps = eps.log2_abs();
  const double l2n = std::log2(static_cast<double>(n));
  const double l2e1 = l2eps - 2 - n * std::abs(sc.rho.log2_abs());

  Poly q;
  {
    PrecisionScope s(width(l2e1 - l2n, n));
    q = round_rel(dilate(p, sc.rho), pow2_real(l2e1 - l2n));
  }
  FactorPair fp = fcs(q, sc.k, sc.delta, pow2_real(l2e1));

  PrecisionScope s(width(l2eps - (n + 4) - l2n, n));
  Poly f = fp.F;
  Poly g = fp.G;
  undilate(f, g, sc.rho, -static_cast<long>(f.degree()));
  return checked(p, std::move(f), std::move(g), eps, "hom");
}

CenterChoice choose_center(const Poly& p1) {
  const int n = p1.degree();
  if (n < 2) throw std::invalid_argument("choose_center: degree must be at least 2");
  const BigComplex centers[4] = {BigComplex(2), BigComplex(0.0, 2.0), BigComplex(-2), BigComplex(0.0, -2.0)};
  CenterChoice best;
  double best_ratio = -INFINITY;
  for (int j = 0; j < 4; ++j) {
    Poly q = shift(p1, centers[j]);
    BigFloat hi = mod_max(q, kCenterTau).value;
    BigFloat lo = mod_min(q, kCenterTau).value;
    const double lr = (hi.log2_abs() - lo.log2_abs()) * kLn2;
    best.log_ratios[static_cast<std::size_t>(j)] = lr;
    if (lr > best_ratio) {
      best_ratio = lr;
      best.index = j;
      best.v = centers[j];
      best.R = std::move(hi);
      best.r = std::move(lo);
      best.shifted = std::move(q);
    }
  }
  return best;
}

FactorPair ctr(const Poly& p, const BigFloat& eps) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("ctr: degree must be at least 2");
  if (!(eps > BigFloat(0L)) || !(eps < BigFloat(1L))) throw std::invalid_argument("ctr: need 0 < eps < 1");
  const double l2eps = eps.log2_abs();
  const double l2p = log2_norm(p);
  const BigComplex u = -(p.coeff(n - 1) / (p.leading() * BigComplex(n)));
  const double l2u1 = std::log2(1 + u.modulus().to_double());

  // Recenter at the root centroid.
  const double l2e0_base = l2eps - 2 - n * l2u1;
  Poly p0;
  {
    unsigned w = width(l2e0_base, n, n * l2u1 + 64);
    PrecisionScope s(w);
    p0 = shift(p, u);
    const double loss = l2p + n * l2u1 - log2_norm(p0);
    const unsigned need = width(l2e0_base, n, loss);
    if (need > w) {
      PrecisionScope s2(need);
      p0 = shift(p, u);
    }
    p0 = round_rel(p0, pow2_real(l2e0_base));
  }
  const double l2p0 = log2_norm(p0);
  const double l2e0 = l2e0_base + l2p - l2p0;
  const double l2n = std::log2(static_cast<double>(n));
  const unsigned undo_bits = width(l2eps - n - 4 - l2n, n, n * (l2u1 + std::log2(3.0)) + 32);

  if (p0[0].modulus().log2_abs() < l2e0 + l2p0) {
    PrecisionScope s(undo_bits);
    std::vector<BigComplex> rest(p0.coeffs().begin() + 1, p0.coeffs().end());
    Poly f = shift(Poly::monomial(1), -u);
    Poly g = shift(Poly(std::move(rest)), -u);
    return checked(p, std::move(f), std::move(g), eps, "ctr");
  }

  // Dilate so that every root lies in the unit disk.
  BigFloat r = mod_max(p0, kCenterTau).value;
  if (!(r * exp(BigFloat(-kCenterTau)) < BigFloat(4L))) {
    throw std::domain_error("ctr: recentered root radius exceeds 4");
  }
  const BigFloat rho = r * exp(BigFloat(kCenterTau));
  const double l2rho = rho.log2_abs();
  const double l2e1 = l2e0 - 2 - n * std::max(0.0, l2rho);
  Poly p1;
  {
    PrecisionScope s(width(l2e1, n));
    p1 = dilate(p0, rho) * BigComplex(BigFloat(1L) / pow(rho, n));
    p1 = round_rel(p1, pow2_real(l2e1));
  }
  const double l2p1 = log2_norm(p1);

  // Shifted problem: roots of P2 have modulus in [1, 3].
  CenterChoice c;
  {
    const double l2e2_floor = l2e1 + l2p0 - l2p1 - 2 * n * std::log2(3.0);
    PrecisionScope s(width(l2e2_floor, n, l2p1 + n * std::log2(3.0) - p1.leading().modulus().log2_abs()));
    c = choose_center(p1);
  }
  const double lr = c.log_ratios[static_cast<std::size_t>(c.index)];
  if (!(lr > 2 * kCenterTau)) throw SplitFailed("ctr: no candidate center separates the roots");
  const double l2e2 = l2e1 + l2p0 - log2_norm(c.shifted) - n * std::log2(3.0);
  record_ctr_budget({n, l2eps, l2e2, lr});

  const Annulus ann{c.r * exp(BigFloat(kCenterTau)), c.R * exp(BigFloat(-kCenterTau)), 1, n - 1};
  FactorPair fp = hom(c.shifted, ann, pow2_real(l2e2));

  PrecisionScope s(std::max(undo_bits, width(l2eps - n - 4 - l2n, n, n * (std::abs(l2rho) + 2) + 32)));
  Poly f = shift(fp.F, -c.v);
  Poly g = shift(fp.G, -c.v);
  undilate(f, g, rho, g.degree());
  f = shift(f, -u);
  g = shift(g, -u);
  return checked(p, std::move(f), std::move(g), eps, "ctr");
}

FactorPair ctr0(const Poly& p, const BigFloat& eps) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("ctr0: degree must be at least 2");
  if (!(eps > BigFloat(0L)) || !(eps < BigFloat(1L))) throw std::invalid_argument("ctr0: need 0 < eps < 1");
  if (p[0].modulus() < eps * l1_norm(p)) {
    std::vector<BigComplex> rest(p.coeffs().begin() + 1, p.coeffs().end());
    Poly f = Poly::monomial(1);
    Poly g(std::move(rest));
    BigFloat r = pair_residual(p, f, g);
    return {std::move(f), std::move(g), std::move(r)};
  }
  const BigFloat outer(1.9);
  const int k1 = nrd(p, outer, kOuterTau);
  if (k1 == n) return ctr(p, eps);
  const Poly star = reciprocal(p);
  const int k2 = nrd(star, outer, kOuterTau);
  if (k2 == n) {
    FactorPair fp = ctr(star, eps);
    Poly f = reversed(fp.F, fp.F.degree());
    Poly g = reversed(fp.G, fp.G.degree());
    return checked(p, std::move(f), std::move(g), eps, "ctr0");
  }
  // rho_{n-k2}(P) < 1/R and R < rho_{k1+1}(P).
  const BigFloat R = outer * exp(BigFloat(-kOuterTau));
  return hom(p, {BigFloat(1L) / R, R, n - k2, k1}, eps);
}

}  // namespace splitcircle
