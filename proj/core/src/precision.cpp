#include "splitcircle/precision.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "splitcircle/errors.hpp"

namespace splitcircle {
namespace {

std::atomic<unsigned> g_ceiling_override{0};

}  // namespace

unsigned default_precision_ceiling(int degree) noexcept {
  int scale = std::max(1, degree / 16);
  return 4096u * static_cast<unsigned>(scale);
}

unsigned precision_ceiling(int degree) noexcept {
  unsigned o = g_ceiling_override.load(std::memory_order_relaxed);
  return o != 0 ? o : default_precision_ceiling(degree);
}

void set_precision_ceiling(unsigned bits) noexcept {
  g_ceiling_override.store(bits, std::memory_order_relaxed);
}

unsigned require_bits(unsigned bits, int degree) {
  unsigned ceiling = precision_ceiling(degree);
  if (bits > ceiling) throw PrecisionExhausted(bits, ceiling);
  return std::max(bits, kMinPrecisionBits);
}

unsigned bits_for(double log2_eps, int terms, unsigned guard) noexcept {
  double need = -log2_eps + std::log2(static_cast<double>(std::max(terms, 1))) + guard;
  if (!(need < 1e9)) need = 1e9;
  auto bits = static_cast<unsigned>(std::ceil(std::max(need, 0.0)));
  return std::max(bits, kMinPrecisionBits);
}

unsigned at_least_working(unsigned bits) noexcept {
  return std::max(bits, working_precision());
}

}  // namespace splitcircle
