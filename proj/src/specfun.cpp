#include "wfield/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace wfield::specfun {

double laguerre(int n, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: order must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * curr - k * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

namespace {

// Ai(0) and -Ai'(0).
constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kDAi0 = 0.258819403792806798405183560189203963L;

constexpr double kSeriesLower = -8.0;
constexpr double kSeriesUpper = 6.0;

double airy_series(double xd) {
  const long double x = xd;
  const long double x3 = x * x * x;
  long double f_term = 1.0L;
  long double g_term = x;
  long double f = f_term;
  long double g = g_term;
  for (int k = 1; k < 200; ++k) {
    f_term *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    g_term *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    f += f_term;
    g += g_term;
    if (std::fabs(f_term) <= 1e-22L * std::fabs(f) && std::fabs(g_term) <= 1e-22L * (std::fabs(g) + 1e-300L)) {
      break;
    }
  }
  return static_cast<double>(kAi0 * f - kDAi0 * g);
}

// Coefficients u_k of the Airy asymptotic expansions.
double next_u(double u_prev, int k) {
  return u_prev * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
}

double airy_asymptotic_positive(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double u = 1.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100; ++k) {
    u = next_u(u, k);
    const double next = u / std::pow(zeta, k) * ((k % 2) ? -1.0 : 1.0);
    if (std::fabs(next) >= std::fabs(term)) break;
    term = next;
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(x, 0.25)) * sum;
}

double airy_asymptotic_negative(double x) {
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  // Even-indexed u_k feed the cosine series, odd-indexed the sine series.
  double u = 1.0;
  double even_sum = 1.0;
  double odd_sum = 0.0;
  double last = 1.0;
  for (int k = 1; k < 120; ++k) {
    u = next_u(u, k);
    const double mag = u / std::pow(zeta, k);
    if (mag >= last) break;
    last = mag;
    // (-1)^j for u_{2j} and u_{2j+1}
    const int j = k / 2;
    const double sign = (j % 2) ? -1.0 : 1.0;
    if (k % 2 == 0) {
      even_sum += sign * mag;
    } else {
      odd_sum += sign * mag;
    }
    if (mag < 1e-17) break;
  }
  const double phase = zeta - std::numbers::pi / 4.0;
  return (std::cos(phase) * even_sum + std::sin(phase) * odd_sum) /
         (std::sqrt(std::numbers::pi) * std::pow(z, 0.25));
}

}  // namespace

double airy_ai(double x) {
  if (std::isnan(x)) return x;
  if (x > kSeriesUpper) {
    if (x > 105.0) return 0.0;
    return airy_asymptotic_positive(x);
  }
  if (x < kSeriesLower) return airy_asymptotic_negative(x);
  return airy_series(x);
}

double airy_zero(int n) {
  if (n < 1) throw std::invalid_argument("airy_zero: index must be >= 1");
  const double t = 3.0 * std::numbers::pi * (4.0 * n - 1.0) / 8.0;
  const double t2 = 1.0 / (t * t);
  const double estimate = -std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / 48.0 * t2 - 5.0 / 36.0 * t2 * t2);
  // Neighbouring zeros are roughly pi / sqrt(|x|) apart.
  const double half_width = 0.3 * std::numbers::pi / std::sqrt(-estimate);
  double lo = estimate - half_width;
  double hi = estimate + half_width;
  double f_lo = airy_ai(lo);
  double f_hi = airy_ai(hi);
  if (f_lo * f_hi > 0.0) {
    throw std::runtime_error("airy_zero: bracket lost for n = " + std::to_string(n));
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::fabs(lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = airy_ai(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

struct HermitePair {
  double value;  ///< orthonormal h_n(z)
  double prev;   ///< h_{n-1}(z)
};

// Orthonormal Hermite recurrence without the Gaussian factor.
HermitePair orthonormal_hermite(int n, double z) {
  double p1 = 1.0 / std::pow(std::numbers::pi, 0.25);
  double p2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
  }
  return {p1, p2};
}

// Sign of h_n(z) exp(-z^2/2) is the sign of h_n(z); the scan only needs that.
double newton_root(int n, double lo, double hi) {
  double flo = orthonormal_hermite(n, lo).value;
  for (int it = 0; it < 60 && hi - lo > 1e-9 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = orthonormal_hermite(n, mid).value;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const HermitePair h = orthonormal_hermite(n, z);
    const double step = h.value / (std::sqrt(2.0 * n) * h.prev);
    z -= step;
    if (std::fabs(step) <= 1e-14 * std::max(1.0, std::fabs(z))) return z;
  }
  throw std::runtime_error("gauss_hermite: Newton iteration did not converge");
}

}  // namespace

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1 || n > 256) throw std::invalid_argument("gauss_hermite: order must be in [1, 256]");
  GaussHermiteRule rule;
  rule.order = n;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  // Positive roots lie below sqrt(2n + 1); adjacent roots are at least
  // ~pi / sqrt(2n + 1) apart, so this step brackets each one exactly once.
  const double top = std::sqrt(2.0 * n + 1.0) + 1.0;
  const double step = 0.25 / std::sqrt(2.0 * n + 1.0);
  std::vector<double> positive;
  double a = (n % 2 == 1) ? step : 0.0;  // odd n: skip the root at 0
  double fa = orthonormal_hermite(n, a).value;
  while (a < top && static_cast<int>(positive.size()) < n / 2) {
    const double b = a + step;
    const double fb = orthonormal_hermite(n, b).value;
    if ((fa < 0.0) != (fb < 0.0)) positive.push_back(newton_root(n, a, b));
    a = b;
    fa = fb;
  }
  if (static_cast<int>(positive.size()) != n / 2) throw std::runtime_error("gauss_hermite: root scan failed");

  auto weight = [n](double z) {
    const double pp = std::sqrt(2.0 * n) * orthonormal_hermite(n, z).prev;
    return 2.0 / (pp * pp);
  };
  const int half = n / 2;
  for (int k = 0; k < half; ++k) {
    const double z = positive[static_cast<std::size_t>(k)];
    const double w = weight(z);
    const auto hi = static_cast<std::size_t>(n - half + k);
    const auto lo = static_cast<std::size_t>(half - 1 - k);
    rule.nodes[hi] = z;
    rule.nodes[lo] = -z;
    rule.weights[hi] = w;
    rule.weights[lo] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[static_cast<std::size_t>(half)] = 0.0;
    rule.weights[static_cast<std::size_t>(half)] = weight(0.0);
  }
  return rule;
}

}  // namespace wfield::specfun
