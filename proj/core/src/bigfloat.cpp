#include "splitcircle/bigfloat.hpp"

#include <climits>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace splitcircle {
namespace {

thread_local unsigned g_working_bits = 128;

unsigned clamp_bits(unsigned bits) {
  return bits < kMinPrecisionBits ? kMinPrecisionBits : bits;
}

}  // namespace

unsigned working_precision() noexcept { return g_working_bits; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_(g_working_bits) {
  g_working_bits = clamp_bits(bits);
}

PrecisionScope::~PrecisionScope() { g_working_bits = saved_; }

BigFloat::BigFloat() {
  mpfr_init2(v_, g_working_bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("BigFloat: non-finite double");
  mpfr_init2(v_, g_working_bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v) {
  mpfr_init2(v_, g_working_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& v, unsigned bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set(v_, v.v_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limb storage; a moved-from value holds no limbs.
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d == nullptr) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
  } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  }
  mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) std::swap(v_[0], other.v_[0]);
  return *this;
}

BigFloat::~BigFloat() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

BigFloat BigFloat::parse(std::string_view text, unsigned bits) {
  std::string s(text);
  BigFloat r(BigFloat(0L), bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0' || !r.is_finite()) {
    throw std::invalid_argument("not a finite decimal number: '" + s + "'");
  }
  return r;
}

BigFloat BigFloat::pow2(long e) {
  BigFloat r(1L);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi() {
  BigFloat r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

unsigned BigFloat::precision() const noexcept {
  return static_cast<unsigned>(mpfr_get_prec(v_));
}

double BigFloat::to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

double BigFloat::log2_abs() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return static_cast<double>(e) + std::log2(std::fabs(m));
}

long BigFloat::exponent() const noexcept {
  if (is_zero()) return LONG_MIN;
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string BigFloat::to_string() const {
  // Digits sufficient to recover every bit of the mantissa.
  std::size_t digits = mpfr_get_str_ndigits(10, mpfr_get_prec(v_));
  return to_string(digits);
}

std::string BigFloat::to_string(std::size_t digits) const {
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // mant = d1 d2 ... with value 0.d1d2... * 10^exp10
  std::string out = neg ? "-" : "";
  out += mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

void BigFloat::adopt_working_precision() {
  if (mpfr_get_prec(v_) != static_cast<mpfr_prec_t>(g_working_bits)) {
    mpfr_prec_round(v_, g_working_bits, MPFR_RNDN);
  }
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  adopt_working_precision();
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  adopt_working_precision();
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  adopt_working_precision();
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  adopt_working_precision();
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r;
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
  return mpfr_equal_p(a.raw(), b.raw()) != 0;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.raw(), b.raw());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r;
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r;
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r;
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r;
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log2(const BigFloat& x) {
  BigFloat r;
  mpfr_log2(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp2(const BigFloat& x) {
  BigFloat r;
  mpfr_exp2(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r;
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r;
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat floor(const BigFloat& x) {
  BigFloat r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}

const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
const BigFloat& min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat add_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_string(std::min<std::size_t>(mpfr_get_str_ndigits(10, x.precision()), 20));
}

}  // namespace splitcircle
