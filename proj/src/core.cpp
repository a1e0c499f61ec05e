#include "wfield/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wfield {

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::HoField:
      return "ho_field";
    case SystemKind::FreeField:
      return "free_field";
    case SystemKind::GqwBallistic:
      return "gqw_ballistic";
    case SystemKind::GqwField:
      return "gqw_field";
  }
  return "unknown";
}

double squared_norm(const PhasePoint& p) {
  return p.x * p.x + p.y * p.y + p.px * p.px + p.py * p.py;
}

double max_abs(const PhasePoint& p) {
  return std::max({std::abs(p.x), std::abs(p.y), std::abs(p.px), std::abs(p.py)});
}

bool is_finite(const PhasePoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.px) && std::isfinite(p.py);
}

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

SystemParams::SystemParams(const SystemSpec& spec) : spec_(spec) {
  require(std::isfinite(spec.mass) && spec.mass > 0.0, "mass must be positive");
  require(std::isfinite(spec.hbar) && spec.hbar > 0.0, "hbar must be positive");
  require(std::isfinite(spec.charge) && spec.charge >= 0.0, "charge must be non-negative");
  require(std::isfinite(spec.field) && spec.field >= 0.0, "field B0 must be non-negative");
  require(std::isfinite(spec.natural_frequency) && spec.natural_frequency >= 0.0,
          "natural frequency must be non-negative");
  require(std::isfinite(spec.gravity) && spec.gravity >= 0.0, "gravity must be non-negative");

  switch (spec.kind) {
    case SystemKind::HoField:
      require(spec.gravity == 0.0, "ho_field requires g = 0");
      break;
    case SystemKind::FreeField:
      require(spec.natural_frequency == 0.0, "free_field requires omega0 = 0");
      require(spec.gravity == 0.0, "free_field requires g = 0");
      break;
    case SystemKind::GqwBallistic:
      require(spec.natural_frequency == 0.0, "gqw_ballistic requires omega0 = 0");
      require(spec.field == 0.0, "gqw_ballistic carries no field (B0 = 0)");
      break;
    case SystemKind::GqwField:
      require(spec.natural_frequency == 0.0, "gqw_field requires omega0 = 0");
      break;
  }
}

SystemParams SystemParams::with_field(double field) const {
  SystemSpec s = spec_;
  s.field = field;
  return SystemParams(s);
}

Frequencies derive_frequencies(const SystemParams& params) {
  const double m = params.mass();
  const double omega = params.charge() * params.field() / (2.0 * m);
  const double w0 = params.natural_frequency();
  const double lambda = std::sqrt(0.5 * m * (omega * omega + w0 * w0));
  const double kappa = std::sqrt(1.0 / (2.0 * m));
  return {omega, lambda, kappa, std::hypot(omega, w0)};
}

double hamiltonian_value(const SystemParams& params, const PhasePoint& pt) {
  const Frequencies f = derive_frequencies(params);
  const double l2 = f.lambda * f.lambda;
  const double k2 = f.kappa * f.kappa;
  double h = l2 * (pt.x * pt.x + pt.y * pt.y) + k2 * (pt.px * pt.px + pt.py * pt.py) +
             f.coupling * (pt.px * pt.y - pt.py * pt.x);
  if (params.gravity() != 0.0) h += params.mass() * params.gravity() * pt.y;
  return h;
}

TimeGrid::TimeGrid(double t_start, double t_end, int n_samples)
    : t_start_(t_start), t_end_(t_end), n_samples_(n_samples) {
  require(std::isfinite(t_start) && std::isfinite(t_end), "time bounds must be finite");
  require(t_end > t_start, "time grid needs t_end > t_start");
  require(n_samples >= 2, "time grid needs at least two samples");
}

double TimeGrid::at(int i) const {
  if (i == n_samples_ - 1) return t_end_;
  return t_start_ + (t_end_ - t_start_) * static_cast<double>(i) / static_cast<double>(n_samples_ - 1);
}

std::vector<double> TimeGrid::samples() const {
  std::vector<double> out(static_cast<std::size_t>(n_samples_));
  for (int i = 0; i < n_samples_; ++i) out[static_cast<std::size_t>(i)] = at(i);
  return out;
}

}  // namespace wfield
