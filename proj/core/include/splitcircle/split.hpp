#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "splitcircle/bigcomplex.hpp"
#include "splitcircle/bigfloat.hpp"
#include "splitcircle/poly.hpp"

namespace splitcircle {

/// Approximate factorization P ~ F G with the relative residual
/// |P - F G| / |P| measured at an elevated width.
struct FactorPair {
  Poly F;
  Poly G;
  BigFloat residual;
};

/// Discretized contour moments over the N-th roots of unity.
struct ContourSums {
  std::vector<BigComplex> W;  ///< W[m-1] ~ sum of z^m over the roots inside
  std::vector<BigComplex> U;  ///< U[m-1] = (1/N) sum_j w^{mj} / P(w^j)
  std::size_t N = 0;
};

/// Smallest power of two L with degree < L.
std::size_t contour_block(int degree) noexcept;

/// Moments for m = 1..k from K = N / L passes of length-L transforms.
/// Requires N to be a positive multiple of contour_block(degree).
/// Throws SampleSingular when some |P(w^j)| < 2^{-bits/2} |P|.
ContourSums contour_sums(const Poly& p, int k, std::size_t n_samples);

/// Monic z^k + phi_1 z^{k-1} + ... + phi_k from power sums W_1..W_k.
Poly from_power_sums(std::span<const BigComplex> w);

struct InitialFactor {
  Poly F0;
  Poly H0;
};

/// F0 from the contour power sums and H0 from the 1/P moments.
InitialFactor res(const Poly& p, int k, std::size_t n_samples);

/// Refines H so that H G0 = 1 - D mod F0 with |D| < eps. Returns nullopt
/// once |D| > 1 or the defect stops shrinking.
std::optional<Poly> aux(const Poly& f0, const Poly& g0, const Poly& h0, const BigFloat& eps);

/// Newton-Schonhage refinement of the factor F0 of P. Returns nullopt when
/// the residual exceeds 1 or stops shrinking.
std::optional<FactorPair> ns(const Poly& p, const Poly& f0, const Poly& h0, const BigFloat& eps);

/// Factor of P with the k roots inside the unit circle, given that
/// e^-delta < |z| < e^delta holds no root. Doubles N until the refinement
/// succeeds; throws SplitFailed past N = 2^16 L.
FactorPair fcs(const Poly& p, int k, double delta, const BigFloat& eps);

/// l1 residual |P - F G| / |P| at twice the widest input width.
BigFloat pair_residual(const Poly& p, const Poly& f, const Poly& g);

/// One aux iteration: log2 of the defect and of its rounding floor at the
/// width the iteration ran at.
struct AuxStep {
  double log2_defect = 0;
  double log2_floor = 0;
};

/// Records the defect sequence of every aux call made on this thread while
/// alive. Scopes do not nest.
class AuxTrace {
 public:
  AuxTrace();
  ~AuxTrace();
  AuxTrace(const AuxTrace&) = delete;
  AuxTrace& operator=(const AuxTrace&) = delete;

  const std::vector<std::vector<AuxStep>>& runs() const noexcept { return runs_; }

 private:
  friend void record_aux_step(const AuxStep& step, bool first);
  std::vector<std::vector<AuxStep>> runs_;
};

}  // namespace splitcircle
