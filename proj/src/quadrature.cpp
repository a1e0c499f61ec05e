#include "wfield/quadrature.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "wfield/specfun.hpp"

namespace wfield {

namespace {

void check_dims(std::size_t dims) {
  if (dims < 1 || dims > static_cast<std::size_t>(QuadratureScheme::kMaxDims)) {
    throw std::invalid_argument("quadrature schemes support 1 to 4 axes");
  }
}

}  // namespace

QuadratureScheme::QuadratureScheme(QuadratureKind kind, std::vector<QuadratureAxis> axes)
    : kind_(kind), axes_(std::move(axes)) {
  check_dims(axes_.size());
  for (const auto& a : axes_) {
    if (a.order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    if (kind_ == QuadratureKind::TensorHermite) {
      if (a.order > kRefineOrderCap) throw std::invalid_argument("Hermite order must be <= 256");
      if (!(a.scale > 0.0) || !std::isfinite(a.center)) {
        throw std::invalid_argument("Hermite axis needs a finite center and positive scale");
      }
    } else if (!(a.lower < a.upper) || !std::isfinite(a.lower) || !std::isfinite(a.upper)) {
      throw std::invalid_argument("box axis needs finite lower < upper");
    }
  }
}

QuadratureScheme QuadratureScheme::tensor_hermite(std::span<const double> centers, int order, double scale) {
  check_dims(centers.size());
  std::vector<QuadratureAxis> axes;
  for (double c : centers) axes.push_back({order, 0.0, 0.0, c, scale});
  return QuadratureScheme(QuadratureKind::TensorHermite, std::move(axes));
}

QuadratureScheme QuadratureScheme::uniform_box(std::span<const double> lower, std::span<const double> upper,
                                               int nodes) {
  if (lower.size() != upper.size()) throw std::invalid_argument("box bounds differ in dimension");
  check_dims(lower.size());
  std::vector<QuadratureAxis> axes;
  for (std::size_t i = 0; i < lower.size(); ++i) axes.push_back({nodes, lower[i], upper[i], 0.0, 1.0});
  return QuadratureScheme(QuadratureKind::UniformBox, std::move(axes));
}

QuadratureScheme QuadratureScheme::cube(int dims, double half_width, int nodes) {
  check_dims(static_cast<std::size_t>(std::max(dims, 0)));
  std::vector<double> lo(static_cast<std::size_t>(dims), -half_width);
  std::vector<double> hi(static_cast<std::size_t>(dims), half_width);
  return uniform_box(lo, hi, nodes);
}

int QuadratureScheme::max_order() const {
  int m = 0;
  for (const auto& a : axes_) m = std::max(m, a.order);
  return m;
}

QuadratureScheme QuadratureScheme::refined() const {
  auto axes = axes_;
  for (auto& a : axes) a.order *= 2;
  return QuadratureScheme(kind_, std::move(axes));
}

std::string QuadratureScheme::describe() const {
  std::string out = kind_ == QuadratureKind::TensorHermite ? "tensor_hermite[" : "uniform_box[";
  char buf[128];
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const auto& a = axes_[i];
    if (kind_ == QuadratureKind::TensorHermite) {
      std::snprintf(buf, sizeof buf, "%sn=%d c=%.12g s=%.12g", i ? "; " : "", a.order, a.center, a.scale);
    } else {
      std::snprintf(buf, sizeof buf, "%sn=%d [%.12g,%.12g]", i ? "; " : "", a.order, a.lower, a.upper);
    }
    out += buf;
  }
  return out + "]";
}

AxisRule axis_rule(const QuadratureScheme& scheme, int axis) {
  const QuadratureAxis& a = scheme.axis(axis);
  AxisRule rule;
  const auto n = static_cast<std::size_t>(a.order);
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (scheme.kind() == QuadratureKind::TensorHermite) {
    const auto gh = specfun::gauss_hermite(a.order);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = gh.nodes[i];
      rule.nodes[i] = a.center + a.scale * u;
      rule.weights[i] = a.scale * gh.weights[i] * std::exp(u * u);
    }
  } else {
    const double h = (a.upper - a.lower) / static_cast<double>(a.order);
    for (std::size_t i = 0; i < n; ++i) {
      rule.nodes[i] = a.lower + (static_cast<double>(i) + 0.5) * h;
      rule.weights[i] = h;
    }
  }
  return rule;
}

void check_refine_tolerance(double rel_tol) {
  if (!(rel_tol > 1e-14)) throw std::invalid_argument("refine_until: rel_tol must exceed 1e-14");
}

namespace detail {

std::string describe_node(std::span<const double> z) {
  std::string out = "(";
  char buf[40];
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.6g", i ? ", " : "", z[i]);
    out += buf;
  }
  return out + ")";
}

}  // namespace detail

}  // namespace wfield
