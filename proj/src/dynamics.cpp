#include "wfield/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace wfield {

namespace {

void require_kind(const SystemParams& params, SystemKind kind, const char* who) {
  if (params.kind() != kind) {
    throw std::invalid_argument(std::string(who) + ": wrong system kind " + std::string(to_string(params.kind())));
  }
}

// Rotation generated by omega (p_x y - p_y x): angle omega t applied to both
// the position and the momentum pair.
PhasePoint rotate(const PhasePoint& p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {p.x * c + p.y * s, p.y * c - p.x * s, p.px * c + p.py * s, p.py * c - p.px * s};
}

// Isotropic oscillator lambda^2 r^2 + kappa^2 p^2 at frequency Omega, with
// stiffness ratio lambda/kappa.
PhasePoint oscillate(const PhasePoint& p, double angle, double ratio) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {p.x * c + p.px * s / ratio, p.y * c + p.py * s / ratio, p.px * c - ratio * p.x * s,
          p.py * c - ratio * p.y * s};
}

PhasePoint free_flow(const PhasePoint& z0, double m, double omega, double t) {
  const double mw = m * omega;
  const double c = std::cos(2.0 * omega * t);
  const double s = std::sin(2.0 * omega * t);
  return {0.5 * ((z0.x + z0.py / mw) + (z0.x - z0.py / mw) * c + (z0.y + z0.px / mw) * s),
          0.5 * ((z0.y - z0.px / mw) + (z0.y + z0.px / mw) * c - (z0.x - z0.py / mw) * s),
          0.5 * ((z0.px - mw * z0.y) + (z0.px + mw * z0.y) * c + (z0.py - mw * z0.x) * s),
          0.5 * ((z0.py + mw * z0.x) + (z0.py - mw * z0.x) * c - (z0.px + mw * z0.y) * s)};
}

}  // namespace

PhasePoint canonical_rhs(const SystemParams& params, const PhasePoint& pt) {
  const Frequencies f = derive_frequencies(params);
  const double l2 = f.lambda * f.lambda;
  const double k2 = f.kappa * f.kappa;
  const double w = f.coupling;
  return {2.0 * k2 * pt.px + w * pt.y, 2.0 * k2 * pt.py - w * pt.x, -2.0 * l2 * pt.x + w * pt.py,
          -2.0 * l2 * pt.y - w * pt.px - params.mass() * params.gravity()};
}

PhasePoint evolve_ho(const TrajectorySolution& sol, double t) {
  require_kind(sol.params, SystemKind::HoField, "evolve_ho");
  const Frequencies f = derive_frequencies(sol.params);
  if (!(f.oscillator > 0.0)) throw std::invalid_argument("evolve_ho: Omega = 0 (no field, no oscillator)");
  return oscillate(rotate(sol.initial, f.coupling * t), f.oscillator * t, f.lambda / f.kappa);
}

PhasePoint evolve_ho_at_frequency(const TrajectorySolution& sol, double t, double oscillator_frequency) {
  require_kind(sol.params, SystemKind::HoField, "evolve_ho_at_frequency");
  if (!(oscillator_frequency > 0.0)) throw std::invalid_argument("oscillator frequency must be positive");
  const Frequencies f = derive_frequencies(sol.params);
  return oscillate(rotate(sol.initial, f.coupling * t), oscillator_frequency * t,
                   sol.params.mass() * oscillator_frequency);
}

PhasePoint evolve_free(const TrajectorySolution& sol, double t) {
  require_kind(sol.params, SystemKind::FreeField, "evolve_free");
  const double omega = derive_frequencies(sol.params).coupling;
  if (!(omega > 0.0)) {
    throw std::invalid_argument("evolve_free: omega = 0; use evolve_free_ballistic for the field-free particle");
  }
  return free_flow(sol.initial, sol.params.mass(), omega, t);
}

PhasePoint evolve_free_ballistic(const TrajectorySolution& sol, double t) {
  const double m = sol.params.mass();
  const PhasePoint& z = sol.initial;
  return {z.x + z.px * t / m, z.y + z.py * t / m, z.px, z.py};
}

PhasePoint evolve_gqw_ballistic(const TrajectorySolution& sol, double t) {
  if (sol.params.kind() != SystemKind::GqwBallistic && sol.params.kind() != SystemKind::GqwField) {
    throw std::invalid_argument("evolve_gqw_ballistic: not a gravitational well");
  }
  const double m = sol.params.mass();
  const double g = sol.params.gravity();
  const PhasePoint& z = sol.initial;
  return {z.x + z.px * t / m, z.y + z.py * t / m - 0.5 * g * t * t, z.px, z.py - m * g * t};
}

PhasePoint evolve_gqw_field(const TrajectorySolution& sol, double t) {
  require_kind(sol.params, SystemKind::GqwField, "evolve_gqw_field");
  const double omega = derive_frequencies(sol.params).coupling;
  if (!(omega > 0.0)) throw std::invalid_argument("evolve_gqw_field: omega = 0; use evolve_gqw_ballistic");
  const double m = sol.params.mass();
  const double g = sol.params.gravity();
  // Particular solution z_p(t) = anchor + drift * t of the affine system.
  const PhasePoint anchor{0.0, 0.0, -m * g / (2.0 * omega), 0.0};
  const PhasePoint drift{-g / (2.0 * omega), 0.0, 0.0, -0.5 * m * g};
  return anchor + drift * t + free_flow(sol.initial - anchor, m, omega, t);
}

PhasePoint evolve(const TrajectorySolution& sol, double t) {
  switch (sol.params.kind()) {
    case SystemKind::HoField:
      return evolve_ho(sol, t);
    case SystemKind::FreeField:
      return derive_frequencies(sol.params).coupling > 0.0 ? evolve_free(sol, t) : evolve_free_ballistic(sol, t);
    case SystemKind::GqwBallistic:
      return evolve_gqw_ballistic(sol, t);
    case SystemKind::GqwField:
      return derive_frequencies(sol.params).coupling > 0.0 ? evolve_gqw_field(sol, t)
                                                            : evolve_gqw_ballistic(sol, t);
  }
  throw std::logic_error("evolve: unknown system kind");
}

double ode_residual(const TrajectorySolution& sol, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("ode_residual: step must be positive");
  const PhasePoint derivative = (evolve(sol, t + h) - evolve(sol, t - h)) * (0.5 / h);
  return max_abs(derivative - canonical_rhs(sol.params, evolve(sol, t)));
}

std::vector<PhasePoint> sample_trajectory(const TrajectorySolution& sol, const std::vector<double>& times) {
  std::vector<PhasePoint> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(evolve(sol, t));
  return out;
}

}  // namespace wfield
