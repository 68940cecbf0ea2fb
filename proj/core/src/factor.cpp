#include "splitcircle/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "splitcircle/errors.hpp"
#include "splitcircle/precision.hpp"
#include "splitcircle/search.hpp"

namespace splitcircle {

namespace {

BigComplex root_of(const Poly& linear) { return -(linear[0] / linear[1]); }

bool root_less(const BigComplex& a, const BigComplex& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

unsigned widest(const Poly& p, std::span<const Poly> factors) {
  unsigned bits = std::max(p.precision(), working_precision());
  for (const Poly& f : factors) bits = std::max(bits, f.precision());
  return bits;
}

}  // namespace

Poly product(std::span<const Poly> factors) {
  if (factors.empty()) return Poly{BigComplex(1)};
  std::vector<Poly> level(factors.begin(), factors.end());
  while (level.size() > 1) {
    std::vector<Poly> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return std::move(level.front());
}

BigFloat verify_residual(const Poly& p, std::span<const Poly> factors) {
  PrecisionScope s(2 * widest(p, factors));
  BigFloat norm = l1_norm(p);
  Poly diff = p - product(factors);
  if (norm.is_zero()) return l1_norm(diff);
  return l1_norm(diff) / norm;
}

FactorList fact(const Poly& p, const BigFloat& eps, const FactObserver& observe) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("fact: degree must be at least 1");
  if (!(eps > BigFloat(0L)) || !(eps < BigFloat(1L))) throw std::invalid_argument("fact: need 0 < eps < 1");
  p.require_finite("fact");
  if (n == 1) {
    FactorList out{{p}, BigFloat(0L)};
    out.residual = verify_residual(p, out.factors);
    return out;
  }

  const double l2split = eps.log2_abs() - n - std::log2(static_cast<double>(n));
  PrecisionScope scope(require_bits(at_least_working(static_cast<unsigned>(std::ceil(-l2split + 32))), n));
  const BigFloat split_eps = exp2(BigFloat(l2split));
  const BigComplex lead = p.leading();

  std::vector<Poly> done;
  std::vector<Poly> todo{p * (BigComplex(1) / lead)};
  while (!todo.empty()) {
    Poly piece = std::move(todo.back());
    todo.pop_back();
    if (piece.degree() == 1) {
      done.push_back(std::move(piece));
      continue;
    }
    FactorPair fp;
    try {
      fp = ctr0(piece, split_eps);
    } catch (const SplitFailed& e) {
      throw SplitFailed(std::string(e.what()) + " (degree " + std::to_string(piece.degree()) + " subproblem)");
    }
    // Keep F monic; G absorbs the scalar so F G is unchanged.
    BigComplex c = fp.F.leading();
    fp.F = fp.F * (BigComplex(1) / c);
    fp.G = fp.G * c;
    todo.push_back(std::move(fp.G));
    todo.push_back(std::move(fp.F));
    if (observe) {
      std::vector<Poly> pieces = done;
      pieces.insert(pieces.end(), todo.begin(), todo.end());
      pieces.front() = pieces.front() * lead;
      observe(pieces);
    }
  }

  std::sort(done.begin(), done.end(), [](const Poly& a, const Poly& b) { return root_less(root_of(a), root_of(b)); });
  done.front() = done.front() * lead;
  FactorList out{std::move(done), BigFloat(0L)};
  out.residual = verify_residual(p, out.factors);
  return out;
}

RootList roots(const Poly& p, const BigFloat& eps) {
  FactorList fl = fact(p, eps);
  RootList out;
  out.roots.reserve(fl.factors.size());
  for (const Poly& f : fl.factors) out.roots.push_back(root_of(f));
  out.residual = std::move(fl.residual);
  return out;
}

}  // namespace splitcircle
