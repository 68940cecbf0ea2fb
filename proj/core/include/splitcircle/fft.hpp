#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "splitcircle/bigcomplex.hpp"
#include "splitcircle/poly.hpp"

namespace splitcircle {

enum class FftDirection {
  forward,  ///< sum_k v_k w^{mk}, w = e^{2 pi i / L}
  inverse,  ///< (1/L) sum_k v_k conj(w)^{mk}
};

/// Precomputed twiddle factors for radix-2 transforms of one length at one
/// precision. Immutable after construction, so a plan may be shared by
/// concurrent readers.
class FftPlan {
 public:
  /// Throws std::invalid_argument unless `length` is a power of two.
  explicit FftPlan(std::size_t length);

  std::size_t length() const noexcept { return n_; }
  unsigned precision() const noexcept { return bits_; }

  /// In-place transform; `values.size()` must equal length().
  void transform(std::span<BigComplex> values, FftDirection dir) const;

 private:
  std::size_t n_;
  unsigned bits_;
  std::vector<BigComplex> twiddle_;  // e^{2 pi i k / n}, k < n/2
};

bool is_power_of_two(std::size_t n) noexcept;

/// Transform of `values` with a plan built for this call.
std::vector<BigComplex> fft(std::vector<BigComplex> values, FftDirection dir);

/// Product via zero-padded transforms; the working precision is raised by
/// a few bits internally to absorb transform rounding.
Poly multiply_fft(const Poly& a, const Poly& b);

}  // namespace splitcircle
