#pragma once

#include <array>
#include <vector>

#include "splitcircle/bigcomplex.hpp"
#include "splitcircle/bigfloat.hpp"
#include "splitcircle/poly.hpp"
#include "splitcircle/split.hpp"

namespace splitcircle {

/// r < R with rho_i(P) < r and R < rho_{j+1}(P).
struct Annulus {
  BigFloat r;
  BigFloat R;
  int i = 0;
  int j = 0;
};

/// k roots in |z| < rho e^-delta and none in rho e^-delta < |z| < rho e^delta.
struct SplitCircle {
  BigFloat rho;
  int k = 0;
  double delta = 0;
};

/// Splitting circle inside the annulus by bisection in log radius.
/// Requires 1 <= i <= j <= n - 1 and r < R.
SplitCircle rad(const Poly& p, const Annulus& ann);

/// Factors P through the circle found by rad: the rescaled problem is passed
/// to fcs and the factors are mapped back. Throws SplitFailed unless the
/// residual, checked at twice the width, is below eps.
FactorPair hom(const Poly& p, const Annulus& ann, const BigFloat& eps);

/// One of the four candidate centers 2 i^j for P1 with roots in the unit disk.
struct CenterChoice {
  int index = 0;
  BigComplex v;
  BigFloat R;     ///< mod_max of P1(z + v)
  BigFloat r;     ///< mod_min of P1(z + v)
  Poly shifted;   ///< P1(z + v)
  std::array<double, 4> log_ratios{};  ///< log(R_j / r_j) for every candidate
};

/// Candidate with the largest modulus ratio R_j / r_j, smallest j on ties.
CenterChoice choose_center(const Poly& p1);

/// Nontrivial factorization P ~ F G for rho_n(P) <= 2, through recentering,
/// dilation into the unit disk and a shifted splitting circle.
FactorPair ctr(const Poly& p, const BigFloat& eps);

/// Nontrivial factorization P ~ F G, |P - F G| < eps |P|, for degree >= 2.
FactorPair ctr0(const Poly& p, const BigFloat& eps);

/// Tolerance chain of one ctr call.
struct CtrBudget {
  int degree = 0;
  double log2_eps = 0;   ///< requested eps
  double log2_eps2 = 0;  ///< eps handed to hom for the shifted problem
  double log_ratio = 0;  ///< log(R_j0 / r_j0)
};

/// Records every ctr budget on this thread while alive. Scopes do not nest.
class CtrTrace {
 public:
  CtrTrace();
  ~CtrTrace();
  CtrTrace(const CtrTrace&) = delete;
  CtrTrace& operator=(const CtrTrace&) = delete;

  const std::vector<CtrBudget>& budgets() const noexcept { return budgets_; }

 private:
  friend void record_ctr_budget(const CtrBudget& b);
  std::vector<CtrBudget> budgets_;
};

}  // namespace splitcircle
