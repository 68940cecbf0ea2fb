#pragma once

#include <functional>
#include <span>
#include <vector>

#include "splitcircle/bigcomplex.hpp"
#include "splitcircle/bigfloat.hpp"
#include "splitcircle/poly.hpp"

namespace splitcircle {

/// Linear factors with prod(factors) ~ P.
struct FactorList {
  std::vector<Poly> factors;  ///< degree 1, sorted by root (re, im)
  BigFloat residual;          ///< verify_residual(P, factors)
};

struct RootList {
  std::vector<BigComplex> roots;  ///< repeated by multiplicity
  BigFloat residual;
};

/// Called after every split with the current pieces; their product
/// approximates P.
using FactObserver = std::function<void(std::span<const Poly> pieces)>;

/// Complete factorization with |P - L_1 ... L_n| < eps |P|. Every split runs
/// at tolerance 2^-n eps / n with n = degree(P). The leading coefficient of
/// P is carried by the first factor.
FactorList fact(const Poly& p, const BigFloat& eps, const FactObserver& observe = {});

/// Roots -b/a of the linear factors a x + b of fact(P, eps).
RootList roots(const Poly& p, const BigFloat& eps);

/// |P - prod(factors)| / |P| at twice the widest width involved.
BigFloat verify_residual(const Poly& p, std::span<const Poly> factors);

/// Product of the factors by balanced pairing.
Poly product(std::span<const Poly> factors);

}  // namespace splitcircle
