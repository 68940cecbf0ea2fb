#pragma once

#include <span>
#include <vector>

#include "splitcircle/bigfloat.hpp"
#include "splitcircle/poly.hpp"

namespace splitcircle {

/// Root-squaring step: Q(x^2) = (-1)^n P(x) P(-x), so the roots of Q are the
/// squares of the roots of P and a monic P gives a monic Q.
/// Precondition: degree(P) >= 1.
Poly graeffe(const Poly& p);

/// Number k of roots in the disk |z| < R, certified up to the factor e^tau:
/// rho_k(P) e^-tau < R < rho_{k+1}(P) e^tau with rho_0 = 0, rho_{n+1} = inf.
/// Throws PrecisionExhausted when the rounding schedule exceeds the ceiling.
int nrd(const Poly& p, const BigFloat& radius, double tau);

struct EnvelopePoint {
  int j;
  double y;  ///< may be -infinity for a zero coefficient
};

/// Corners of the concave majorant of the points, in increasing j: the
/// polyline through them lies on or above every finite point. Points with
/// y = -infinity are ignored and points interior to a hull edge are not
/// corners.
std::vector<int> lower_convex_envelope(std::span<const EnvelopePoint> points);

/// Power-of-two dilation that levels the envelope corners around index k.
struct EnvelopeScaling {
  int ell = 0;    ///< largest corner < k
  int h = 0;      ///< smallest corner >= k
  long beta = 0;  ///< floor(log2(|a_ell| / |a_h|) / (h - ell) + 1/2)
  BigFloat rho;   ///< 2^beta
};

/// Envelope scaling of P for the k-th modulus. Preconditions: a_0 != 0,
/// 1 <= k <= degree(P).
EnvelopeScaling envelope_scaling(const Poly& p, int k);

/// R with R e^-tau <= rho_k(P) <= R e^tau.
struct ModulusEstimate {
  BigFloat value;
  double tau = 0;
};

/// k-th smallest root modulus. Throws std::invalid_argument unless
/// 1 <= k <= degree(P) and tau > 0.
ModulusEstimate mod_k(const Poly& p, int k, double tau);

/// Largest root modulus; zero when every root is zero.
ModulusEstimate mod_max(const Poly& p, double tau);

/// Smallest root modulus; zero when P(0) = 0.
ModulusEstimate mod_min(const Poly& p, double tau);

}  // namespace splitcircle
