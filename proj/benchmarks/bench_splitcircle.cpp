#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "splitcircle/factor.hpp"
#include "splitcircle/graeffe.hpp"
#include "splitcircle/poly.hpp"
#include "splitcircle/precision.hpp"
#include "splitcircle/split.hpp"

namespace {

using splitcircle::BigComplex;
using splitcircle::BigFloat;
using splitcircle::Poly;

Poly random_roots_poly(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<BigComplex> roots;
  for (int j = 0; j < n; ++j) {
    const double r = std::sqrt(0.01 + u(rng) * (100 - 0.01));
    const double t = 2 * M_PI * u(rng);
    roots.emplace_back(BigFloat(r * std::cos(t)), BigFloat(r * std::sin(t)));
  }
  return Poly::from_roots(roots);
}

void BM_Graeffe(benchmark::State& state) {
  splitcircle::PrecisionScope s(256);
  const Poly p = random_roots_poly(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(splitcircle::graeffe(p));
}
BENCHMARK(BM_Graeffe)->Arg(8)->Arg(16)->Arg(32)->Arg(128);

void BM_Nrd(benchmark::State& state) {
  splitcircle::PrecisionScope s(128);
  const Poly p = random_roots_poly(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(splitcircle::nrd(p, BigFloat(1.0), 0.05));
}
BENCHMARK(BM_Nrd)->Arg(8)->Arg(16)->Arg(32);

void BM_ModMax(benchmark::State& state) {
  splitcircle::PrecisionScope s(128);
  const Poly p = random_roots_poly(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(splitcircle::mod_max(p, 0.01));
}
BENCHMARK(BM_ModMax)->Arg(8)->Arg(16)->Arg(32);

void BM_ContourSums(benchmark::State& state) {
  splitcircle::PrecisionScope s(128);
  const int n = static_cast<int>(state.range(0));
  std::vector<BigComplex> roots;
  for (int j = 0; j < n; ++j) {
    const double r = j < n / 2 ? 0.5 : 2.0;
    roots.emplace_back(BigFloat(r * std::cos(j)), BigFloat(r * std::sin(j)));
  }
  const Poly p = Poly::from_roots(roots);
  const std::size_t N = 8 * splitcircle::contour_block(n);
  for (auto _ : state) benchmark::DoNotOptimize(splitcircle::contour_sums(p, n / 2, N));
}
BENCHMARK(BM_ContourSums)->Arg(8)->Arg(16)->Arg(32);

void BM_Fact(benchmark::State& state) {
  splitcircle::PrecisionScope s(128);
  const Poly p = random_roots_poly(static_cast<int>(state.range(0)), 4);
  const BigFloat eps(1e-20);
  for (auto _ : state) benchmark::DoNotOptimize(splitcircle::fact(p, eps));
}
BENCHMARK(BM_Fact)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
