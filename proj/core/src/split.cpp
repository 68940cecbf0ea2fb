#include "splitcircle/split.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "splitcircle/errors.hpp"
#include "splitcircle/fft.hpp"
#include "splitcircle/precision.hpp"

namespace splitcircle {

namespace {

thread_local AuxTrace* t_trace = nullptr;

constexpr int kMaxAuxIterations = 200;
constexpr int kMaxNsIterations = 200;
constexpr std::size_t kSampleCeilingFactor = std::size_t{1} << 16;
constexpr double kLog2E = 1.4426950408889634;

// log2 of the rounding error expected in 1 - H G0 mod F0 at the working
// width, with 8 guard bits for the reduction mod F0.
double rounding_floor(const Poly& h, const Poly& g0, const Poly& f0) {
  const double terms = std::log2(4.0 * (g0.size() + f0.size())) + 8;
  return l1_norm(h).log2_abs() + l1_norm(g0).log2_abs() + terms - static_cast<double>(working_precision());
}

}  // namespace

void record_aux_step(const AuxStep& step, bool first) {
  if (!t_trace) return;
  if (first || t_trace->runs_.empty()) t_trace->runs_.emplace_back();
  t_trace->runs_.back().push_back(step);
}

AuxTrace::AuxTrace() { t_trace = this; }
AuxTrace::~AuxTrace() { t_trace = nullptr; }

std::size_t contour_block(int degree) noexcept {
  return std::bit_ceil(static_cast<std::size_t>(degree) + 1);
}

ContourSums contour_sums(const Poly& p, int k, std::size_t n_samples) {
  const int n = p.degree();
  if (k < 1 || k >= n) throw std::invalid_argument("contour_sums: need 1 <= k < degree");
  const std::size_t L = contour_block(n);
  if (n_samples == 0 || n_samples % L != 0) {
    throw std::invalid_argument("contour_sums: N must be a positive multiple of the block length");
  }
  const std::size_t K = n_samples / L;
  const unsigned bits = working_precision();
  const FftPlan plan(L);
  const Poly dp = derivative(p);
  BigFloat threshold = ldexp(l1_norm(p), -static_cast<long>(bits / 2));
  BigFloat threshold_sq = threshold * threshold;

  std::vector<BigComplex> W(static_cast<std::size_t>(k)), U(static_cast<std::size_t>(k));
  std::vector<BigComplex> alpha(L), beta(L), gamma(L), quot(L);
  for (std::size_t u = 0; u < K; ++u) {
    // Twist by w^{uj} so that a length-L transform samples P at w^{u + vK}.
    BigComplex wu = BigComplex::unit_root(static_cast<long>(u), static_cast<long>(n_samples));
    BigComplex tw(1);
    for (std::size_t j = 0; j < L; ++j) {
      alpha[j] = j < p.size() ? p[j] * tw : BigComplex();
      beta[j] = j < dp.size() ? dp[j] * tw : BigComplex();
      tw *= wu;
    }
    plan.transform(alpha, FftDirection::forward);
    plan.transform(beta, FftDirection::forward);
    for (std::size_t v = 0; v < L; ++v) {
      if (alpha[v].norm() < threshold_sq) throw SampleSingular("contour_sums: sample too close to a root");
      gamma[v] = BigComplex(1) / alpha[v];
      quot[v] = beta[v] * gamma[v];
    }
    plan.transform(gamma, FftDirection::forward);
    plan.transform(quot, FftDirection::forward);
    // U_m += x_m w^{mu}, W_m += y_{m+1} w^{(m+1)u}
    BigComplex pw = wu;
    for (int m = 1; m <= k; ++m) {
      auto i = static_cast<std::size_t>(m);
      U[i - 1].add_product(gamma[i], pw);
      pw *= wu;
      W[i - 1].add_product(quot[i + 1], pw);
    }
  }
  BigFloat inv_n = BigFloat(1L) / BigFloat(static_cast<long>(n_samples));
  for (int m = 0; m < k; ++m) {
    W[static_cast<std::size_t>(m)] *= inv_n;
    U[static_cast<std::size_t>(m)] *= inv_n;
  }
  return {std::move(W), std::move(U), n_samples};
}

Poly from_power_sums(std::span<const BigComplex> w) {
  const std::size_t k = w.size();
  std::vector<BigComplex> phi(k + 1);
  phi[0] = BigComplex(1);
  for (std::size_t m = 1; m <= k; ++m) {
    BigComplex acc = w[m - 1];
    for (std::size_t i = 1; i < m; ++i) acc.add_product(w[i - 1], phi[m - i]);
    phi[m] = -(acc / BigFloat(static_cast<long>(m)));
  }
  // F0 = sum phi_m z^{k-m}
  std::reverse(phi.begin(), phi.end());
  return Poly(std::move(phi));
}

InitialFactor res(const Poly& p, int k, std::size_t n_samples) {
  ContourSums cs = contour_sums(p, k, n_samples);
  Poly f0 = from_power_sums(cs.W);
  // H0 = sum_{l<k} (sum_{m=l+1}^{k} phi_{k-m} U_{m-l}) z^l, with phi_{k-m} = f0[m].
  std::vector<BigComplex> h(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l) {
    for (int m = l + 1; m <= k; ++m) {
      h[static_cast<std::size_t>(l)].add_product(f0.coeff(m), cs.U[static_cast<std::size_t>(m - l - 1)]);
    }
  }
  return {std::move(f0), Poly(std::move(h))};
}

namespace {

enum class Outcome { converged, diverged, stalled };

// Bits above the rounding floor within which a stalled defect counts as
// floor-limited rather than divergent.
constexpr double kFloorMargin = 16;

Outcome aux_run(const Poly& f0, const Poly& g0, Poly& h, const BigFloat& eps) {
  BigFloat prev;
  const Poly one{BigComplex(1)};
  for (int it = 0; it < kMaxAuxIterations; ++it) {
    Poly d = one - mulmod(h, g0, f0);
    BigFloat nd = l1_norm(d);
    const double floor = rounding_floor(h, g0, f0);
    record_aux_step({nd.is_zero() ? -INFINITY : nd.log2_abs(), floor}, it == 0);
    if (nd < eps) return Outcome::converged;
    if (nd > BigFloat(1L)) return Outcome::diverged;
    if (it > 0 && !(nd < prev)) {
      return nd.log2_abs() < floor + kFloorMargin ? Outcome::stalled : Outcome::diverged;
    }
    h = mulmod(h, one + d, f0);
    prev = std::move(nd);
  }
  return Outcome::stalled;
}

Outcome ns_run(const Poly& p, const Poly& f0, const Poly& h0, const BigFloat& eps, FactorPair& out) {
  const BigFloat norm_p = l1_norm(p);
  const double floor = kFloorMargin - static_cast<double>(working_precision()) / 2;
  Poly f = f0;
  Poly h = h0;
  BigFloat prev;
  for (int it = 0; it < kMaxNsIterations; ++it) {
    if (f.degree() != f0.degree() || !f.leading().is_finite()) return Outcome::diverged;
    DivRem qr = divrem(p, f);
    BigFloat e0 = l1_norm(qr.remainder) / norm_p;
    if (e0 < eps) {
      BigFloat r = pair_residual(p, f, qr.quotient);
      if (r < eps) {
        out = FactorPair{std::move(f), std::move(qr.quotient), std::move(r)};
        return Outcome::converged;
      }
    }
    if (e0 > BigFloat(1L)) return Outcome::diverged;
    if (it > 0 && !(e0 < prev)) return e0.log2_abs() < floor ? Outcome::stalled : Outcome::diverged;
    Outcome a = aux_run(f, qr.quotient, h, max(e0, eps));
    if (a != Outcome::converged) return a;
    f += mulmod(h, qr.remainder, f);
    prev = std::move(e0);
  }
  return Outcome::stalled;
}

}  // namespace

std::optional<Poly> aux(const Poly& f0, const Poly& g0, const Poly& h0, const BigFloat& eps) {
  if (f0.degree() < 1) throw std::invalid_argument("aux: F0 must have degree >= 1");
  Poly h = h0;
  if (aux_run(f0, g0, h, eps) != Outcome::converged) return std::nullopt;
  return h;
}

std::optional<FactorPair> ns(const Poly& p, const Poly& f0, const Poly& h0, const BigFloat& eps) {
  if (f0.degree() < 1 || f0.degree() >= p.degree()) throw std::invalid_argument("ns: need 1 <= deg F0 < deg P");
  FactorPair out;
  if (ns_run(p, f0, h0, eps, out) != Outcome::converged) return std::nullopt;
  return out;
}

FactorPair fcs(const Poly& p, int k, double delta, const BigFloat& eps) {
  const int n = p.degree();
  if (k < 1 || k >= n) throw std::invalid_argument("fcs: need 1 <= k < degree");
  if (!(delta > 0)) throw std::invalid_argument("fcs: delta must be positive");
  if (!(eps > BigFloat(0L))) throw std::invalid_argument("fcs: eps must be positive");
  const std::size_t L = contour_block(n);
  const auto K = static_cast<std::size_t>(std::max(std::ceil(1.0 / (2.0 * delta)), 2.0));
  unsigned bits = require_bits(at_least_working(static_cast<unsigned>(std::ceil(n - eps.log2_abs() + 32))), n);
  const std::size_t ceiling = kSampleCeilingFactor * L;
  for (std::size_t N = K * L; N <= ceiling; N *= 2) {
    // The moments only need to resolve the e^{-delta N} quadrature error;
    // the refinement below recovers the full width.
    double want = 2.0 * delta * static_cast<double>(N) * kLog2E + 4.0 * std::log2(static_cast<double>(N)) + n + 64;
    auto res_bits = static_cast<unsigned>(std::min<double>(bits, std::ceil(want)));
    InitialFactor init;
    bool sampled = false;
    while (!sampled) {
      try {
        PrecisionScope s(res_bits);
        init = res(p, k, N);
        sampled = true;
      } catch (const SampleSingular&) {
        if (res_bits >= bits) break;
        res_bits = std::min(bits, 2 * res_bits);
      }
    }
    if (!sampled) continue;
    for (;;) {
      PrecisionScope s(bits);
      FactorPair pair;
      Outcome o = ns_run(p, init.F0, init.H0, eps, pair);
      if (o == Outcome::converged && pair.F.degree() == k) return pair;
      if (o != Outcome::stalled) break;
      // Refinement ran into the rounding floor: widen, keep the samples.
      bits = require_bits(bits + std::max(32u, bits / 4), n);
    }
  }
  throw SplitFailed("fcs: no convergence up to " + std::to_string(ceiling) + " samples");
}

BigFloat pair_residual(const Poly& p, const Poly& f, const Poly& g) {
  unsigned bits = std::max({p.precision(), f.precision(), g.precision(), working_precision()});
  PrecisionScope s(2 * bits);
  BigFloat norm = l1_norm(p);
  if (norm.is_zero()) return l1_norm(f * g);
  return l1_norm(p - f * g) / norm;
}

}  // namespace splitcircle
