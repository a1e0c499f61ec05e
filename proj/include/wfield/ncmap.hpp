#pragma once

#include "wfield/core.hpp"

namespace wfield {

/// Scalar noncommutative parameters: theta_ij = theta eps_ij, eta_ij = eta eps_ij,
/// and the Seiberg-Witten scale factors mu, nu.
struct NCParams {
  double theta = 0.0;  ///< length^2, >= 0
  double eta = 0.0;    ///< momentum^2, >= 0
  double mu = 1.0;     ///< > 0
  double nu = 1.0;     ///< > 0
};

void validate(const NCParams& nc);

/// B0 = m^2 omega0^2 theta / (q hbar) + eta / (q hbar). Needs omega0 > 0, q != 0.
double effective_b0_ho(const NCParams& nc, const SystemParams& params);

/// B0 = eta / (q hbar); theta drops out.
double effective_b0_free(const NCParams& nc, const SystemParams& params);

/// r1 -> scale * r1 + shear * p2, applied to initial conditions.
struct CoordinateShift {
  double scale = 1.0;
  double shear = 0.0;

  PhasePoint apply(const PhasePoint& pt) const { return {scale * pt.x + shear * pt.py, pt.y, pt.px, pt.py}; }
};

struct GqwNcMap {
  double field = 0.0;
  CoordinateShift shift;
};

/// B0 = eta / (q hbar) with r1 -> nu r1 - theta / (2 nu hbar) p2.
/// eta = 0 gives B0 = 0: the field flow degenerates and callers must use the
/// ballistic well instead.
GqwNcMap gqw_nc_map(const NCParams& nc, const SystemParams& params);

/// s = 1 / (mu nu) - 1.
double auxiliary_s(double mu, double nu);

/// Sigma = delta + theta eta_.. / hbar^2 reduces to (1 - theta eta / hbar^2) * I
/// for the scalar parameters; invertible unless theta eta = hbar^2 (to 1e-12
/// relative).
bool sigma_invertible(const NCParams& nc, double hbar);

}  // namespace wfield
