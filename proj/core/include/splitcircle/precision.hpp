#pragma once

#include "splitcircle/bigfloat.hpp"

namespace splitcircle {

/// Default ceiling on the mantissa width for a degree-n problem:
/// 4096 * max(1, n/16) bits.
unsigned default_precision_ceiling(int degree) noexcept;

/// Effective ceiling. A process-wide override (set_precision_ceiling) wins
/// over the default formula when non-zero.
unsigned precision_ceiling(int degree) noexcept;

/// Overrides the ceiling for every degree; 0 restores the default formula.
void set_precision_ceiling(unsigned bits) noexcept;

/// Throws PrecisionExhausted when `bits` exceeds precision_ceiling(degree);
/// otherwise returns max(bits, kMinPrecisionBits).
unsigned require_bits(unsigned bits, int degree);

/// Mantissa width that represents each of `terms` values to relative error
/// 2^log2_eps / terms, plus `guard` bits; never below kMinPrecisionBits.
unsigned bits_for(double log2_eps, int terms = 1, unsigned guard = 16) noexcept;

/// Width to use at least at: max(bits, working_precision()).
unsigned at_least_working(unsigned bits) noexcept;

}  // namespace splitcircle
