#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "splitcircle/bigcomplex.hpp"
#include "splitcircle/bigfloat.hpp"

namespace splitcircle {

/// Univariate complex polynomial, coefficients in ascending degree order.
///
/// The representation is always normalised: the last stored coefficient is
/// nonzero, and the zero polynomial has no coefficients (degree -1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigComplex> coeffs);
  Poly(std::initializer_list<BigComplex> coeffs);

  /// c * x^k.
  static Poly monomial(int k, BigComplex c = BigComplex(1));
  /// lead * prod (x - r).
  static Poly from_roots(std::span<const BigComplex> roots, const BigComplex& lead = BigComplex(1));

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }

  /// Coefficient of x^j; zero outside [0, degree].
  BigComplex coeff(int j) const;
  const BigComplex& operator[](std::size_t j) const { return c_[j]; }
  const BigComplex& leading() const { return c_.back(); }
  std::span<const BigComplex> coeffs() const noexcept { return c_; }

  /// Largest mantissa width among the coefficients (0 for the zero poly).
  unsigned precision() const noexcept;
  /// Copy with every coefficient rounded to `bits`.
  Poly rounded(unsigned bits) const;
  /// Multiplies by 2^e, exact.
  Poly scaled_pow2(long e) const;

  /// Throws ExponentOverflow if any coefficient is infinite or NaN.
  const Poly& require_finite(const char* what) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

 private:
  void normalize();
  std::vector<BigComplex> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const BigComplex& s);
Poly operator*(const BigComplex& s, const Poly& a);
bool operator==(const Poly& a, const Poly& b);

/// Degree threshold above which products switch to FFT multiplication.
inline constexpr int kFftMultiplyThreshold = 64;

/// O(n^2) product.
Poly multiply_schoolbook(const Poly& a, const Poly& b);

Poly derivative(const Poly& p);

/// Sum of coefficient moduli, rounded upward so the result bounds the exact
/// norm of the stored coefficients.
BigFloat l1_norm(const Poly& p);

/// Horner evaluation.
BigComplex eval(const Poly& p, const BigComplex& z);

/// Degree threshold at or below which shift uses the binomial convolution.
inline constexpr int kShiftConvolutionMaxDegree = 32;

/// Q(z) = P(z + u).
Poly shift(const Poly& p, const BigComplex& u);
/// Taylor shift by direct binomial convolution, used by shift for small degree.
Poly shift_convolution(const Poly& p, const BigComplex& u);
/// Taylor shift by splitting P = lo + x^m hi, used by shift for large degree.
Poly shift_divide_conquer(const Poly& p, const BigComplex& u);

/// Q(z) = P(rho z). Throws std::invalid_argument for rho <= 0 and
/// ExponentOverflow when a coefficient leaves the exponent range.
Poly dilate(const Poly& p, const BigFloat& rho);

/// Q(z) = P(2^beta z), exact. Throws ExponentOverflow like dilate.
Poly dilate_pow2(const Poly& p, long beta);

/// P divided by x^v, where v is the multiplicity of the root 0.
Poly strip_zero_roots(const Poly& p, int* multiplicity = nullptr);

/// x^n P(1/x), leading zeros stripped.
Poly reciprocal(const Poly& p);
/// x^d P(1/x) for d >= degree(P), without shrinking the nominal degree first.
Poly reversed(const Poly& p, int d);

/// Rounds every coefficient so that |P - P^| < eps |P^| in the l1 norm and
/// returns P^. The aggregate bound is re-checked at a higher width.
/// Precondition: P != 0, eps > 0.
Poly round_rel(const Poly& p, const BigFloat& eps);

/// Mantissa width round_rel uses for a degree-n polynomial.
unsigned round_rel_bits(int degree, double log2_eps) noexcept;

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division A = Q B + R, deg R < deg B. Throws
/// std::domain_error when B is zero.
DivRem divrem(const Poly& a, const Poly& b);

/// (A B) mod F.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace splitcircle
