#pragma once

#include <stdexcept>
#include <string>

namespace splitcircle {

/// Base of every failure caused by the numerics rather than by bad input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tolerance schedule needs more mantissa bits than the configured ceiling.
class PrecisionExhausted : public NumericalError {
 public:
  PrecisionExhausted(unsigned required_bits, unsigned ceiling_bits)
      : NumericalError("precision exhausted: " + std::to_string(required_bits) +
                       " bits required, ceiling is " + std::to_string(ceiling_bits)),
        required_(required_bits),
        ceiling_(ceiling_bits) {}

  unsigned required_bits() const noexcept { return required_; }
  unsigned ceiling_bits() const noexcept { return ceiling_; }

 private:
  unsigned required_;
  unsigned ceiling_;
};

/// Factor extraction did not converge before the sample-count ceiling.
class SplitFailed : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A contour sample landed too close to a root.
class SampleSingular : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A result left the exponent range (infinite or NaN).
class ExponentOverflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace splitcircle
