#pragma once

#include <vector>

#include "wfield/core.hpp"

namespace wfield {

/// Closed-form trajectory through `initial` at t = 0.
struct TrajectorySolution {
  SystemParams params;
  PhasePoint initial;
};

/// Right-hand side of the canonical equations generated by hamiltonian_value:
///   xdot = p_x/m + omega y,                ydot = p_y/m - omega x,
///   pxdot = -2 lambda^2 x + omega p_y,     pydot = -2 lambda^2 y - omega p_x - m g.
PhasePoint canonical_rhs(const SystemParams& params, const PhasePoint& pt);

/// Oscillator in a field: rotation at omega composed with an isotropic
/// oscillator at Omega. Requires HoField with Omega > 0.
PhasePoint evolve_ho(const TrajectorySolution& sol, double t);

/// evolve_ho with Omega replaced by `oscillator_frequency` (and lambda/kappa by
/// m * oscillator_frequency). With frequency 1 and m = 1 this is the trajectory
/// behind the printed HO fidelity formula.
PhasePoint evolve_ho_at_frequency(const TrajectorySolution& sol, double t, double oscillator_frequency);

/// Cyclotron motion at 2 omega about a fixed guiding center. Requires
/// FreeField with omega > 0; omega = 0 is rejected, see evolve_free_ballistic.
PhasePoint evolve_free(const TrajectorySolution& sol, double t);

/// Straight-line motion x + p t / m. The omega = 0 fallback of evolve_free.
PhasePoint evolve_free_ballistic(const TrajectorySolution& sol, double t);

/// Free fall above the floor: y = y0 + p_y0 t/m - g t^2/2, p_y = p_y0 - m g t.
PhasePoint evolve_gqw_ballistic(const TrajectorySolution& sol, double t);

/// Gravity plus field (omega > 0): the free cyclotron flow about a drifting
/// particular solution. The guiding center drifts along x with velocity
/// -g/(2 omega); canonical p_y drifts with rate -m g / 2.
PhasePoint evolve_gqw_field(const TrajectorySolution& sol, double t);

/// Dispatches on the system kind. Degenerate omega = 0 cases fall back to
/// the ballistic flows (FreeField -> straight line, GqwField -> free fall).
PhasePoint evolve(const TrajectorySolution& sol, double t);

/// Max-norm mismatch between central differences of evolve() and
/// canonical_rhs at time t.
double ode_residual(const TrajectorySolution& sol, double t, double h);

std::vector<PhasePoint> sample_trajectory(const TrajectorySolution& sol, const std::vector<double>& times);

}  // namespace wfield
