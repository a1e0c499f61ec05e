#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wfield/detail/parallel.hpp"
#include "wfield/errors.hpp"

namespace wfield {

enum class QuadratureKind { TensorHermite, UniformBox };

struct QuadratureAxis {
  int order = 1;
  double lower = 0.0;   ///< UniformBox only
  double upper = 0.0;   ///< UniformBox only
  double center = 0.0;  ///< TensorHermite only
  double scale = 1.0;   ///< TensorHermite only
};

/// Tensor-product rule over 1 to 4 axes.
///
/// TensorHermite maps Gauss-Hermite nodes u to center + scale * u and divides
/// the exp(-u^2) weight back out, so integrands are passed bare. UniformBox is
/// the composite midpoint rule.
class QuadratureScheme {
 public:
  static constexpr int kMaxDims = 4;

  static QuadratureScheme tensor_hermite(std::span<const double> centers, int order, double scale = 1.0);
  static QuadratureScheme uniform_box(std::span<const double> lower, std::span<const double> upper, int nodes);
  /// Symmetric box [-half_width, half_width]^dims.
  static QuadratureScheme cube(int dims, double half_width, int nodes);

  QuadratureScheme(QuadratureKind kind, std::vector<QuadratureAxis> axes);

  QuadratureKind kind() const { return kind_; }
  int dims() const { return static_cast<int>(axes_.size()); }
  const QuadratureAxis& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }
  const std::vector<QuadratureAxis>& axes() const { return axes_; }
  int max_order() const;

  /// Every axis order multiplied by two (box spacing halves).
  QuadratureScheme refined() const;
  std::string describe() const;

 private:
  QuadratureKind kind_;
  std::vector<QuadratureAxis> axes_;
};

/// Physical node coordinates and effective weights (Jacobian and, for
/// Hermite, exp(u^2) folded in) for one axis.
struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

AxisRule axis_rule(const QuadratureScheme& scheme, int axis);

namespace detail {

std::string describe_node(std::span<const double> z);

template <std::size_t K, class F>
void accumulate_axis(F& f, const std::vector<AxisRule>& rules, std::size_t axis, std::array<double, 4>& z,
                     std::array<double, K>& out) {
  const AxisRule& rule = rules[axis];
  const std::size_t dims = rules.size();
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    z[axis] = rule.nodes[i];
    std::array<double, K> part{};
    if (axis + 1 == dims) {
      part = f(std::span<const double>(z.data(), dims));
      for (std::size_t k = 0; k < K; ++k) {
        if (!std::isfinite(part[k])) {
          throw NumericalError("non-finite integrand at node " +
                               describe_node(std::span<const double>(z.data(), dims)));
        }
      }
    } else {
      accumulate_axis<K>(f, rules, axis + 1, z, part);
    }
    for (std::size_t k = 0; k < K; ++k) out[k] += rule.weights[i] * part[k];
  }
}

}  // namespace detail

/// Integrates K quantities in one sweep over the nodes. f takes the node
/// coordinates as a span and returns std::array<double, K>.
///
/// Summation is nested per axis with the outer axis split across workers and
/// combined in index order, so results are bit-identical for any worker count.
/// A non-finite value throws NumericalError naming the node.
template <std::size_t K, class F>
std::array<double, K> integrate_many(F&& f, const QuadratureScheme& scheme) {
  std::vector<AxisRule> rules;
  rules.reserve(static_cast<std::size_t>(scheme.dims()));
  for (int a = 0; a < scheme.dims(); ++a) rules.push_back(axis_rule(scheme, a));

  const AxisRule& outer = rules.front();
  std::vector<std::array<double, K>> slices(outer.nodes.size());
  wfield::detail::parallel_for(outer.nodes.size(), [&](std::size_t i) {
    std::array<double, 4> z{};
    z[0] = outer.nodes[i];
    std::array<double, K> part{};
    if (rules.size() == 1) {
      part = f(std::span<const double>(z.data(), 1));
      for (std::size_t k = 0; k < K; ++k) {
        if (!std::isfinite(part[k])) {
          throw NumericalError("non-finite integrand at node " +
                               detail::describe_node(std::span<const double>(z.data(), 1)));
        }
      }
    } else {
      detail::accumulate_axis<K>(f, rules, 1, z, part);
    }
    slices[i] = part;
  });

  std::array<double, K> total{};
  for (std::size_t i = 0; i < slices.size(); ++i) {
    for (std::size_t k = 0; k < K; ++k) total[k] += outer.weights[i] * slices[i][k];
  }
  return total;
}

/// Tensor-product estimate of the integral of a scalar f over the scheme.
template <class F>
double integrate(F&& f, const QuadratureScheme& scheme) {
  auto wrapped = [&f](std::span<const double> z) { return std::array<double, 1>{f(z)}; };
  return integrate_many<1>(wrapped, scheme)[0];
}

struct RefineResult {
  double value = 0.0;
  double achieved_tol = 0.0;  ///< relative change of the last refinement
  bool converged = false;
  QuadratureScheme scheme;    ///< finest scheme evaluated
};

inline constexpr int kRefineOrderCap = 256;

void check_refine_tolerance(double rel_tol);

/// Doubles every axis order until two successive estimates agree to rel_tol.
/// If the cap is reached first the last estimate is returned with
/// converged = false.
template <class F>
RefineResult refine_until(F&& f, const QuadratureScheme& scheme, double rel_tol, int cap = kRefineOrderCap) {
  check_refine_tolerance(rel_tol);
  QuadratureScheme current = scheme;
  double previous = integrate(f, current);
  RefineResult result{previous, INFINITY, false, current};
  while (2 * current.max_order() <= cap) {
    current = current.refined();
    const double value = integrate(f, current);
    const double denom = std::max(std::fabs(value), 1e-300);
    result = RefineResult{value, std::fabs(value - previous) / denom, false, current};
    if (result.achieved_tol <= rel_tol) {
      result.converged = true;
      break;
    }
    previous = value;
  }
  return result;
}

}  // namespace wfield
