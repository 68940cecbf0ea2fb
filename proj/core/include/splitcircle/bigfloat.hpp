#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace splitcircle {

/// Smallest mantissa width any scope may use.
inline constexpr unsigned kMinPrecisionBits = 53;

/// Mantissa width used by arithmetic on the calling thread.
unsigned working_precision() noexcept;

/// Sets the working precision for the lifetime of the object and restores
/// the previous value on destruction. Scopes nest; the setting is per thread.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Arbitrary-precision binary floating-point real backed by MPFR.
///
/// Every value remembers the width it was computed at. Arithmetic results are
/// produced at the thread's working precision with round-to-nearest; copies
/// are exact. Non-finite results are never produced silently: operations that
/// can overflow are checked by the polynomial layer (see Poly::require_finite).
class BigFloat {
 public:
  /// Zero at the working precision.
  BigFloat();
  BigFloat(double v);  // NOLINT(google-explicit-constructor)
  BigFloat(long v);    // NOLINT(google-explicit-constructor)
  BigFloat(int v) : BigFloat(static_cast<long>(v)) {}  // NOLINT

  /// Builds a value at an explicit width (rounding `v` if needed).
  BigFloat(const BigFloat& v, unsigned bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Parses a decimal string at `bits`, round-to-nearest.
  /// Throws std::invalid_argument when the text is not a finite number.
  static BigFloat parse(std::string_view text, unsigned bits);

  /// 2^e, exact.
  static BigFloat pow2(long e);
  static BigFloat pi();

  unsigned precision() const noexcept;
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  double to_double() const noexcept;
  /// log2|x| as a double; -infinity for zero. Safe far outside double range.
  double log2_abs() const noexcept;
  /// Binary exponent e with 0.5 <= |x| 2^-e < 1; LONG_MIN for zero.
  long exponent() const noexcept;

  /// Shortest decimal that round-trips at this value's own precision.
  std::string to_string() const;
  /// Decimal with `digits` significant digits.
  std::string to_string(std::size_t digits) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

 private:
  void adopt_working_precision();

  mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);

bool operator==(const BigFloat& a, const BigFloat& b);
std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log2(const BigFloat& x);
BigFloat exp2(const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
BigFloat floor(const BigFloat& x);
const BigFloat& max(const BigFloat& a, const BigFloat& b);
const BigFloat& min(const BigFloat& a, const BigFloat& b);

/// Sum rounded toward +infinity.
BigFloat add_up(const BigFloat& a, const BigFloat& b);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace splitcircle
