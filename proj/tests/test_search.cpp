#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "splitcircle/errors.hpp"
#include "splitcircle/graeffe.hpp"
#include "splitcircle/precision.hpp"
#include "splitcircle/search.hpp"
#include "support/test_support.hpp"

namespace splitcircle {
namespace {

using testing::bc;
using testing::cd;
using testing::poly_from_roots;
using testing::poly_real;
using testing::to_cd;

class SearchTest : public ::testing::Test {
 protected:
  PrecisionScope scope_{128};
};

double ln(const BigFloat& x) { return x.log2_abs() * std::log(2.0); }

// No constructed root modulus in the open log-annulus around rho.
bool root_free(const std::vector<cd>& roots, const SplitCircle& sc) {
  const double c = ln(sc.rho);
  for (const cd& z : roots) {
    if (std::abs(std::log(std::abs(z)) - c) < sc.delta) return false;
  }
  return true;
}

TEST_F(SearchTest, RadSingleGap) {
  Poly p = poly_from_roots({0.5, 4});
  Annulus ann{BigFloat(0.5 * std::exp(0.1)), BigFloat(4 * std::exp(-0.1)), 1, 1};
  SplitCircle sc = rad(p, ann);
  EXPECT_EQ(sc.k, 1);
  EXPECT_NEAR(ln(sc.rho), std::log(std::sqrt(2.0)), 0.05);
  const double width = std::log(8.0) - 0.2;
  EXPECT_GE(sc.delta, 0.5 * std::log(8.0) - width / 4);
}

TEST_F(SearchTest, RadDoubleRoots) {
  const double third = 1.0 / 3.0;
  Poly p = poly_from_roots({third, third, 3, 3});
  SplitCircle sc = rad(p, {BigFloat(third * std::exp(0.1)), BigFloat(3 * std::exp(-0.1)), 2, 2});
  EXPECT_EQ(sc.k, 2);
  EXPECT_NEAR(ln(sc.rho), 0.0, 0.1);
}

TEST_F(SearchTest, RadRejectsBadAnnulus) {
  Poly p = poly_from_roots({0.5, 1, 4});
  EXPECT_THROW(rad(p, {BigFloat(1), BigFloat(2), 0, 1}), std::invalid_argument);
  EXPECT_THROW(rad(p, {BigFloat(1), BigFloat(2), 2, 1}), std::invalid_argument);
  EXPECT_THROW(rad(p, {BigFloat(2), BigFloat(1), 1, 1}), std::invalid_argument);
}

TEST_F(SearchTest, RadAnnulusIsRootFree) {
  std::mt19937_64 rng(41);
  int cases = 0;
  while (cases < 100) {
    int n = 3 + static_cast<int>(rng() % 14);
    std::vector<cd> roots;
    for (int j = 0; j < n; ++j) roots.push_back(testing::random_log_modulus(rng, 0.1, 10));
    std::vector<double> mod = testing::sorted_moduli(roots);
    // rho_i < r < R < rho_{j+1} for random 1 <= i <= j <= n - 1.
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    int j = i + static_cast<int>(rng() % static_cast<unsigned>(n - i));
    double r = mod[i - 1] * 1.001;
    double R = mod[j] / 1.001;
    if (R / r < 1.05) continue;
    Poly p = poly_from_roots(roots);
    SplitCircle sc = rad(p, {BigFloat(r), BigFloat(R), i, j});
    EXPECT_GT(sc.delta, 0);
    EXPECT_GE(sc.k, i);
    EXPECT_LE(sc.k, j);
    EXPECT_TRUE(root_free(roots, sc)) << "case " << cases;
    EXPECT_EQ(testing::count_inside(roots, std::exp(ln(sc.rho))), sc.k);
    ++cases;
  }
}

TEST_F(SearchTest, HomExamples) {
  Poly p = poly_from_roots({0.5, 4});
  Annulus ann{BigFloat(0.5 * std::exp(0.1)), BigFloat(4 * std::exp(-0.1)), 1, 1};
  BigFloat eps(1e-10);
  FactorPair fp = hom(p, ann, eps);
  EXPECT_LT(fp.residual, eps);
  ASSERT_EQ(fp.F.degree(), 1);
  EXPECT_NEAR(to_cd(-fp.F[0] / fp.F[1]).real(), 0.5, 1e-9);

  Poly q = poly_real({0.25, 0, 1}) * poly_from_roots({2, -3});
  FactorPair fq = hom(q, {BigFloat(0.6), BigFloat(1.8), 2, 2}, eps);
  ASSERT_EQ(fq.F.degree(), 2);
  EXPECT_LT(testing::rel_diff(fq.F * (bc(1) / fq.F.leading()), poly_real({0.25, 0, 1})), 1e-9);
  EXPECT_LT(pair_residual(q, fq.F, fq.G), eps);
}

TEST_F(SearchTest, HomContract) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    std::vector<cd> roots = testing::roots_avoiding(rng, n, 1.0, 0.2);
    int k = testing::count_inside(roots, 1.0);
    if (k == 0 || k == n) continue;
    BigFloat eps(1e-30);
    FactorPair fp = hom(poly_from_roots(roots), {BigFloat(std::exp(-0.2)), BigFloat(std::exp(0.2)), k, k}, eps);
    EXPECT_EQ(fp.F.degree(), k);
    EXPECT_LT(pair_residual(poly_from_roots(roots), fp.F, fp.G), eps);
  }
}

TEST_F(SearchTest, Ctr0ZeroRoot) {
  FactorPair fp = ctr0(poly_real({0, 1, 1}), BigFloat(0.1));
  EXPECT_EQ(fp.F, poly_real({0, 1}));
  EXPECT_EQ(fp.G, poly_real({1, 1}));
}

TEST_F(SearchTest, Ctr0InnerPath) {
  BigFloat eps(1e-8);
  Poly p = poly_real({-0.25, 0, 1});
  FactorPair fp = ctr0(p, eps);
  EXPECT_LT(fp.residual, eps);
  EXPECT_EQ(fp.F.degree(), 1);
  double root = to_cd(-fp.F[0] / fp.F[1]).real();
  EXPECT_NEAR(std::abs(root), 0.5, 1e-7);
}

TEST_F(SearchTest, Ctr0ReciprocalPath) {
  BigFloat eps(1e-8);
  Poly p = poly_real({-100, 0, 1});
  EXPECT_EQ(nrd(p, BigFloat(1.9), 0.05), 0);
  FactorPair fp = ctr0(p, eps);
  EXPECT_LT(fp.residual, eps);
  EXPECT_EQ(fp.F.degree(), 1);
  EXPECT_NEAR(std::abs(to_cd(-fp.F[0] / fp.F[1]).real()), 10, 1e-6);
}

TEST_F(SearchTest, Ctr0MixedPath) {
  BigFloat eps(1e-20);
  Poly p = poly_from_roots({0.1, 0.3, 5, cd(0, 8)});
  FactorPair fp = ctr0(p, eps);
  EXPECT_LT(fp.residual, eps);
  EXPECT_GE(fp.F.degree(), 1);
  EXPECT_LE(fp.F.degree(), 3);
}

TEST_F(SearchTest, CtrExamples) {
  BigFloat eps(1e-12);
  FactorPair a = ctr(poly_real({-0.25, 0, 1}), eps);
  EXPECT_LT(a.residual, eps);

  Poly p = poly_from_roots({0.9, -0.9, cd(0, 0.5), cd(0, -0.5)});
  FactorPair b = ctr(p, eps);
  EXPECT_LT(b.residual, eps);
  EXPECT_GE(b.F.degree(), 1);
  EXPECT_LE(b.F.degree(), 3);
  EXPECT_EQ(b.F.degree() + b.G.degree(), 4);
}

TEST_F(SearchTest, CtrRepeatedRootShortcut) {
  // All roots at the centroid: the recentered constant term vanishes.
  Poly p = poly_from_roots({cd(0.3, 0.2), cd(0.3, 0.2), cd(0.3, 0.2)});
  FactorPair fp = ctr(p, BigFloat(1e-10));
  EXPECT_EQ(fp.F.degree(), 1);
  EXPECT_LT(fp.residual, BigFloat(1e-10));
}

TEST_F(SearchTest, CenterRatioOnCenteredPolys) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    std::vector<cd> roots;
    cd sum = 0;
    for (int j = 0; j < n; ++j) {
      roots.push_back(testing::random_in_annulus(rng, 0.0, 1.0));
      sum += roots.back();
    }
    double top = 0;
    for (cd& z : roots) {
      z -= sum / static_cast<double>(n);
      top = std::max(top, std::abs(z));
    }
    for (cd& z : roots) z /= top;
    CenterChoice c = choose_center(poly_from_roots(roots));
    EXPECT_GE(c.log_ratios[static_cast<std::size_t>(c.index)], 0.3) << "trial " << trial;
    for (double lr : c.log_ratios) EXPECT_LE(lr, c.log_ratios[static_cast<std::size_t>(c.index)]);
  }
}

TEST_F(SearchTest, CtrBudgetChain) {
  std::mt19937_64 rng(53);
  CtrTrace trace;
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    std::vector<cd> roots;
    for (int j = 0; j < n; ++j) roots.push_back(testing::random_in_annulus(rng, 0.05, 1.9));
    BigFloat eps(1e-15);
    FactorPair fp = ctr(poly_from_roots(roots), eps);
    EXPECT_LT(fp.residual, eps);
  }
  ASSERT_FALSE(trace.budgets().empty());
  for (const CtrBudget& b : trace.budgets()) {
    EXPECT_GE(b.log2_eps2, b.log2_eps - 4 - b.degree * std::log2(648.0));
  }
}

TEST_F(SearchTest, SplitsAreNontrivial) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    std::vector<cd> roots;
    for (int j = 0; j < n; ++j) roots.push_back(testing::random_log_modulus(rng, 0.1, 10));
    Poly p = poly_from_roots(roots);
    BigFloat eps(1e-25);
    FactorPair fp = ctr0(p, eps);
    EXPECT_GE(fp.F.degree(), 1);
    EXPECT_LE(fp.F.degree(), n - 1);
    EXPECT_EQ(fp.F.degree() + fp.G.degree(), n);
    EXPECT_LT(pair_residual(p, fp.F, fp.G), eps);
  }
}

}  // namespace
}  // namespace splitcircle
