#include "splitcircle/fft.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "splitcircle/precision.hpp"

namespace splitcircle {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

FftPlan::FftPlan(std::size_t length) : n_(length), bits_(working_precision()) {
  if (!is_power_of_two(length)) throw std::invalid_argument("fft: length must be a power of two");
  twiddle_.reserve(n_ / 2);
  for (std::size_t k = 0; k < n_ / 2; ++k) {
    twiddle_.push_back(BigComplex::unit_root(static_cast<long>(k), static_cast<long>(n_)));
  }
}

void FftPlan::transform(std::span<BigComplex> a, FftDirection dir) const {
  if (a.size() != n_) throw std::invalid_argument("fft: length mismatch with plan");
  if (n_ == 1) return;
  unsigned log_n = static_cast<unsigned>(std::countr_zero(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t j = 0;
    for (unsigned b = 0; b < log_n; ++b) j |= ((i >> b) & 1u) << (log_n - 1 - b);
    if (i < j) std::swap(a[i], a[j]);
  }
  const bool inverse = dir == FftDirection::inverse;
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    std::size_t half = len / 2;
    std::size_t step = n_ / len;
    for (std::size_t i = 0; i < n_; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        BigComplex& lo = a[i + j];
        BigComplex& hi = a[i + j + half];
        BigComplex v = j == 0 ? hi : hi * (inverse ? twiddle_[j * step].conj() : twiddle_[j * step]);
        hi = lo - v;
        lo += v;
      }
    }
  }
  if (inverse) {
    long shift = -static_cast<long>(log_n);
    for (BigComplex& z : a) z = ldexp(z, shift);
  }
}

std::vector<BigComplex> fft(std::vector<BigComplex> values, FftDirection dir) {
  FftPlan plan(values.size());
  plan.transform(values, dir);
  return values;
}

Poly multiply_fft(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::size_t need = a.size() + b.size() - 1;
  std::size_t len = std::bit_ceil(need);
  unsigned extra = 2 * static_cast<unsigned>(std::countr_zero(len)) + 8;
  unsigned out_bits = working_precision();
  std::vector<BigComplex> out;
  {
    PrecisionScope scope(out_bits + extra);
    FftPlan plan(len);
    std::vector<BigComplex> fa(len), fb(len);
    for (std::size_t j = 0; j < a.size(); ++j) fa[j] = a[j];
    for (std::size_t j = 0; j < b.size(); ++j) fb[j] = b[j];
    plan.transform(fa, FftDirection::forward);
    plan.transform(fb, FftDirection::forward);
    for (std::size_t j = 0; j < len; ++j) fa[j] *= fb[j];
    plan.transform(fa, FftDirection::inverse);
    out.reserve(need);
    for (std::size_t j = 0; j < need; ++j) out.emplace_back(fa[j], out_bits);
  }
  // The leading product is known exactly up to one rounding.
  out.back() = a.leading() * b.leading();
  return Poly(std::move(out));
}

}  // namespace splitcircle
