#include <gtest/gtest.h>

#include <random>

#include "splitcircle/errors.hpp"
#include "splitcircle/fft.hpp"
#include "splitcircle/poly.hpp"
#include "splitcircle/precision.hpp"
#include "support/test_support.hpp"

namespace splitcircle {
namespace {

using testing::bc;
using testing::log2_rel_diff;
using testing::poly_real;
using testing::random_poly;

class NumericPolyTest : public ::testing::Test {
 protected:
  PrecisionScope scope_{256};
};

TEST_F(NumericPolyTest, L1NormExamples) {
  EXPECT_EQ(l1_norm(poly_real({1, 2, 3})), BigFloat(6L));
  EXPECT_EQ(l1_norm(Poly{bc(3, 4)}), BigFloat(5L));
  EXPECT_TRUE(l1_norm(Poly{}).is_zero());
}

TEST_F(NumericPolyTest, L1NormRoundsUp) {
  // |1 + i| = sqrt 2 is inexact; the stored bound must not fall below it.
  Poly p{bc(1, 1)};
  BigFloat n = l1_norm(p);
  PrecisionScope hi(1024);
  BigFloat exact = sqrt(BigFloat(2L));
  EXPECT_GE(n, exact);
}

TEST_F(NumericPolyTest, EvalExamples) {
  EXPECT_EQ(eval(poly_real({-1, 0, 1}), bc(2)), bc(3));
  EXPECT_TRUE(eval(poly_real({1, 0, 1}), BigComplex::i()).is_zero());
  EXPECT_TRUE(eval(Poly{}, bc(5, 1)).is_zero());
  // 1 + w + w^2 = 0 for the primitive cube root of unity
  BigComplex w = BigComplex::unit_root(1, 3);
  BigComplex v = eval(poly_real({1, 1, 1}), w);
  EXPECT_LT(v.modulus().log2_abs(), -250.0);
}

TEST_F(NumericPolyTest, ShiftExamples) {
  EXPECT_EQ(shift(poly_real({0, 0, 1}), bc(1)), poly_real({1, 2, 1}));
  std::mt19937_64 rng(7);
  Poly p = random_poly(rng, 6);
  EXPECT_EQ(shift(p, bc(0)), p);
  Poly expected{bc(-2), bc(0, 2), bc(1)};
  EXPECT_EQ(shift(poly_real({-1, 0, 1}), BigComplex::i()), expected);
}

TEST_F(NumericPolyTest, ShiftPreservesDegreeAndLeading) {
  std::mt19937_64 rng(11);
  for (int n : {1, 5, 32, 33, 70}) {
    Poly p = random_poly(rng, n);
    Poly q = shift(p, bc(0.3, -0.7));
    EXPECT_EQ(q.degree(), n);
    EXPECT_EQ(q.leading(), p.leading());
  }
}

TEST_F(NumericPolyTest, ShiftStrategiesAgree) {
  std::mt19937_64 rng(12);
  for (int n : {8, 40, 65}) {
    Poly p = random_poly(rng, n);
    BigComplex u = bc(0.6, 0.2);
    EXPECT_LT(log2_rel_diff(shift_divide_conquer(p, u), shift_convolution(p, u)), -230.0) << n;
  }
}

TEST_F(NumericPolyTest, ShiftRoundTrip) {
  // Intermediate coefficients grow like (1 + |u|)^n, so the bound loosens
  // with the degree.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 64 + (trial * 7) % 20;
    Poly p = random_poly(rng, n);
    BigComplex u = bc(d(rng) * 0.7, d(rng) * 0.7);
    Poly back = shift(shift(p, u), -u);
    EXPECT_LT(log2_rel_diff(back, p), -256.0 + 24 + 1.6 * n) << "n=" << n;
  }
}

TEST_F(NumericPolyTest, DilateExamples) {
  EXPECT_EQ(dilate(poly_real({-4, 0, 1}), BigFloat(2L)), poly_real({-4, 0, 4}));
  Poly p = poly_real({3, -1, 2});
  EXPECT_EQ(dilate(p, BigFloat(1L)), p);
  EXPECT_EQ(dilate(poly_real({1, 1}), BigFloat(0.5)), poly_real({1, 0.5}));
}

TEST_F(NumericPolyTest, DilateRoundTrip) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> d(0.1, 10);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, 1 + trial);
    BigFloat rho(d(rng));
    Poly back = dilate(dilate(p, rho), BigFloat(1L) / rho);
    EXPECT_LT(log2_rel_diff(back, p), -256.0 + 8 + std::log2(trial + 2.0));
  }
}

TEST_F(NumericPolyTest, DilateErrors) {
  EXPECT_THROW(dilate(poly_real({1, 1}), BigFloat(0L)), std::invalid_argument);
  EXPECT_THROW(dilate(poly_real({1, 1}), BigFloat(-1L)), std::invalid_argument);
  // rho^n past the exponent range.
  BigFloat huge = BigFloat::pow2(1L << 29);
  EXPECT_THROW(dilate(poly_real({1, 0, 0, 0, 1}), huge), ExponentOverflow);
}

TEST_F(NumericPolyTest, ReciprocalExamples) {
  EXPECT_EQ(reciprocal(poly_real({2, 3, 1})), poly_real({1, 3, 2}));
  Poly p = poly_real({5, -1, 0, 2});
  EXPECT_EQ(reciprocal(reciprocal(p)), p);
  // x^2 reverses to 1 + 0x + 0x^2, degenerate constant
  EXPECT_EQ(reciprocal(poly_real({0, 0, 1})), poly_real({1}));
  EXPECT_TRUE(reciprocal(Poly{}).is_zero());
}

TEST_F(NumericPolyTest, RoundRelExamples) {
  BigFloat eps = BigFloat::pow2(-10);
  Poly p = poly_real({1, 1});
  EXPECT_EQ(round_rel(p, eps), p);

  Poly q{BigComplex(BigFloat(1L) + BigFloat::pow2(-200)), bc(1)};
  Poly qh = round_rel(q, eps);
  EXPECT_EQ(qh, poly_real({1, 1}));
  // |P - P^| / |P^| = 2^-200 / 2
  EXPECT_EQ(l1_norm(q - qh) / l1_norm(qh), BigFloat::pow2(-201));
  EXPECT_EQ(round_rel(q, BigFloat(2L)).precision(), kMinPrecisionBits);
  EXPECT_THROW(round_rel(Poly{}, eps), std::invalid_argument);
}

TEST_F(NumericPolyTest, RoundRelContractOnRandomPolys) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> deg(1, 24);
  std::uniform_int_distribution<int> e(-200, -5);
  for (int trial = 0; trial < 1000; ++trial) {
    Poly p = random_poly(rng, deg(rng));
    BigFloat eps = BigFloat::pow2(e(rng));
    Poly ph = round_rel(p, eps);
    PrecisionScope hi(2 * 256);
    ASSERT_LT(l1_norm(p - ph), eps * l1_norm(ph));
  }
}

TEST_F(NumericPolyTest, DivremExamples) {
  DivRem a = divrem(poly_real({-1, 0, 1}), poly_real({-1, 1}));
  EXPECT_EQ(a.quotient, poly_real({1, 1}));
  EXPECT_TRUE(a.remainder.is_zero());

  DivRem b = divrem(poly_real({1, 0, 1}), poly_real({0, 1}));
  EXPECT_EQ(b.quotient, poly_real({0, 1}));
  EXPECT_EQ(b.remainder, poly_real({1}));

  DivRem c = divrem(poly_real({1, 2}), poly_real({1, 2, 3}));
  EXPECT_TRUE(c.quotient.is_zero());
  EXPECT_EQ(c.remainder, poly_real({1, 2}));

  EXPECT_THROW(divrem(poly_real({1}), Poly{}), std::domain_error);
}

TEST_F(NumericPolyTest, DivremIdentityOnRandomInputs) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(rng, 5 + trial % 20);
    Poly b = random_poly(rng, 1 + trial % 5);
    DivRem qr = divrem(a, b);
    EXPECT_LT(qr.remainder.degree(), b.degree());
    EXPECT_LT(log2_rel_diff(qr.quotient * b + qr.remainder, a), -200.0);
  }
}

TEST_F(NumericPolyTest, MulmodExamples) {
  EXPECT_EQ(mulmod(poly_real({0, 1}), poly_real({0, 1}), poly_real({1, 0, 1})), poly_real({-1}));
  Poly b = poly_real({3, -2});
  EXPECT_EQ(mulmod(poly_real({1}), b, poly_real({1, 0, 1})), b);
  // (-2/7)(x - 4) mod (x - 1/2) = (-2/7)(1/2 - 4) = 1
  Poly h{BigComplex(BigFloat(-2L) / BigFloat(7L))};
  Poly r = mulmod(poly_real({-4, 1}), h, poly_real({-0.5, 1}));
  ASSERT_EQ(r.degree(), 0);
  EXPECT_LT(testing::abs_diff(r[0], bc(1)), 1e-70);
  EXPECT_THROW(mulmod(b, b, poly_real({2})), std::domain_error);
}

TEST_F(NumericPolyTest, FftExamples) {
  auto ones = fft({bc(1), bc(0), bc(0), bc(0)}, FftDirection::forward);
  for (const auto& z : ones) EXPECT_EQ(z, bc(1));
  auto peak = fft({bc(1), bc(1), bc(1), bc(1)}, FftDirection::forward);
  EXPECT_EQ(peak[0], bc(4));
  for (int j = 1; j < 4; ++j) EXPECT_TRUE(peak[j].is_zero());
  EXPECT_THROW(fft(std::vector<BigComplex>(6), FftDirection::forward), std::invalid_argument);
}

TEST_F(NumericPolyTest, FftMatchesDirectSum) {
  // forward uses w = e^{+2 pi i / L}
  std::mt19937_64 rng(17);
  Poly p = random_poly(rng, 7);
  std::vector<BigComplex> v(p.coeffs().begin(), p.coeffs().end());
  auto f = fft(v, FftDirection::forward);
  for (int m = 0; m < 8; ++m) {
    BigComplex direct = eval(p, BigComplex::unit_root(m, 8));
    EXPECT_LT((f[m] - direct).modulus().log2_abs(), -245.0);
  }
}

TEST_F(NumericPolyTest, FftRoundTrip) {
  std::mt19937_64 rng(18);
  for (std::size_t len = 2; len <= 1024; len *= 2) {
    Poly p = random_poly(rng, static_cast<int>(len) - 1);
    std::vector<BigComplex> v(p.coeffs().begin(), p.coeffs().end());
    auto back = fft(fft(v, FftDirection::forward), FftDirection::inverse);
    EXPECT_LT(log2_rel_diff(Poly(back), p), -256.0 + 2 * std::log2(len) + 4) << len;
  }
}

TEST_F(NumericPolyTest, FftMultiplyMatchesSchoolbook) {
  std::mt19937_64 rng(19);
  Poly a = random_poly(rng, 90);
  Poly b = random_poly(rng, 70);
  EXPECT_LT(log2_rel_diff(multiply_fft(a, b), multiply_schoolbook(a, b)), -240.0);
  EXPECT_LT(log2_rel_diff(a * b, multiply_schoolbook(a, b)), -240.0);
}

TEST_F(NumericPolyTest, NormSubmultiplicative) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly(rng, 1 + trial % 13);
    Poly b = random_poly(rng, 1 + trial % 7);
    EXPECT_LE(l1_norm(a * b), l1_norm(a) * l1_norm(b) * BigFloat(1.0 + 1e-60));
  }
}

TEST_F(NumericPolyTest, SchonhageFactorNormInequality) {
  // |F| |G| <= 2^{deg(FG) - 1} |FG| for monic factor pairs
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int df = 1 + trial % 9;
    int dg = 1 + (trial / 9) % 9;
    std::vector<testing::cd> rf, rg;
    for (int j = 0; j < df; ++j) rf.push_back(testing::random_in_annulus(rng, 0.0, 3.0));
    for (int j = 0; j < dg; ++j) rg.push_back(testing::random_in_annulus(rng, 0.0, 3.0));
    Poly f = testing::poly_from_roots(rf);
    Poly g = testing::poly_from_roots(rg);
    BigFloat lhs = l1_norm(f) * l1_norm(g);
    BigFloat rhs = BigFloat::pow2(df + dg - 1) * l1_norm(f * g);
    EXPECT_LE(lhs, rhs);
  }
}

TEST_F(NumericPolyTest, ZeroPolynomialBehaviour) {
  Poly z;
  EXPECT_EQ(z.degree(), -1);
  EXPECT_TRUE((z * poly_real({1, 2})).is_zero());
  EXPECT_TRUE(shift(z, bc(1)).is_zero());
  EXPECT_TRUE(dilate(z, BigFloat(2L)).is_zero());
  EXPECT_TRUE(derivative(z).is_zero());
  EXPECT_EQ(poly_real({0, 0}).degree(), -1);
}

TEST_F(NumericPolyTest, FromRootsExpands) {
  std::vector<BigComplex> roots{bc(1), bc(-1), bc(0, 2)};
  Poly p = Poly::from_roots(roots);
  // (x^2 - 1)(x - 2i) = x^3 - 2i x^2 - x + 2i
  EXPECT_EQ(p, (Poly{bc(0, 2), bc(-1), bc(0, -2), bc(1)}));
}

TEST(PrecisionCeiling, DefaultFormulaAndOverride) {
  EXPECT_EQ(default_precision_ceiling(4), 4096u);
  EXPECT_EQ(default_precision_ceiling(32), 8192u);
  EXPECT_EQ(default_precision_ceiling(64), 16384u);
  EXPECT_THROW(require_bits(5000, 8), PrecisionExhausted);
  set_precision_ceiling(100000);
  EXPECT_EQ(require_bits(5000, 8), 5000u);
  set_precision_ceiling(0);
  EXPECT_EQ(require_bits(10, 8), kMinPrecisionBits);
}

TEST(PrecisionScopeTest, NestsAndRestores) {
  unsigned before = working_precision();
  {
    PrecisionScope a(300);
    EXPECT_EQ(working_precision(), 300u);
    {
      PrecisionScope b(20);
      EXPECT_EQ(working_precision(), kMinPrecisionBits);
      EXPECT_EQ(BigFloat(1L).precision(), kMinPrecisionBits);
    }
    EXPECT_EQ(working_precision(), 300u);
  }
  EXPECT_EQ(working_precision(), before);
}

TEST(BigFloatTest, ParseAndFormat) {
  PrecisionScope s(128);
  BigFloat x = BigFloat::parse("-0.5", 128);
  EXPECT_EQ(x, BigFloat(-0.5));
  EXPECT_EQ(x.to_string(), "-5e-1");
  EXPECT_THROW(BigFloat::parse("1.2.3", 64), std::invalid_argument);
  EXPECT_THROW(BigFloat::parse("", 64), std::invalid_argument);
  EXPECT_THROW(BigFloat::parse("inf", 64), std::invalid_argument);
  BigFloat third = BigFloat(1L) / BigFloat(3L);
  EXPECT_EQ(BigFloat::parse(third.to_string(), 128), third);
}

}  // namespace
}  // namespace splitcircle
