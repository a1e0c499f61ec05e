#pragma once

#include <vector>

namespace wfield::specfun {

/// Laguerre polynomial L_n(x) (alpha = 0) by upward three-term recurrence.
/// Throws std::invalid_argument for n < 0.
double laguerre(int n, double x);

/// Airy function Ai(x).
///
/// Maclaurin series (extended precision) on [-8, 6]; Poincare asymptotic
/// expansions outside, where the optimally truncated remainder stays below
/// 1e-14. Absolute error is below 1e-12 on [-15, 10].
double airy_ai(double x);

/// n-th zero of Ai on the negative axis (n >= 1): -2.338107..., -4.087949...
/// Bisection inside a bracket seeded by the asymptotic zero estimate.
double airy_zero(int n);

struct GaussHermiteRule {
  int order = 0;
  std::vector<double> nodes;    ///< strictly increasing, symmetric about 0
  std::vector<double> weights;  ///< against exp(-x^2); sum to sqrt(pi)
};

/// n-point Gauss-Hermite rule, exact for polynomials of degree <= 2n - 1
/// against exp(-x^2). Valid for 1 <= n <= 256.
GaussHermiteRule gauss_hermite(int n);

}  // namespace wfield::specfun
