#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "wfield/core.hpp"
#include "wfield/quadrature.hpp"

namespace wfield {

/// Unit-width translated Gaussian, (1/pi^2) exp(-|r - r0|^2 - |p - p0|^2).
struct GaussianWigner {
  PhasePoint center;
};

/// Stationary oscillator-in-field state with quantum numbers (n1, n2).
struct StationaryHOState {
  int n1 = 0;
  int n2 = 0;
  SystemParams params;
};

/// Landau-level state of the free particle in a field. The quadratic form
/// has rank 2, so the state only normalizes on a bounded box; `normalization`
/// is the prefactor N (1 means the bare printed prefactor).
struct LandauState {
  int n = 0;
  SystemParams params;
  double normalization = 1.0;
  double box_half_width = 8.0;
};

/// Gravitational-well state: a (x, p_x) Gaussian times the Airy y-sector,
/// supported on y in [0, y_max], |p_y| <= py_max.
struct GQWState {
  int n_y = 1;
  SystemParams params;
  double x0 = 0.0;
  double px0 = 0.0;
  double normalization = 1.0;  ///< A_n
  double energy = 0.0;         ///< E_{n_y}, cached from gqw_energy
  double y_max = 0.0;
  double py_max = 0.0;
};

using WignerState = std::variant<GaussianWigner, StationaryHOState, LandauState, GQWState>;

std::string_view state_name(const WignerState& state);

// ---- Gaussian ----

double eval_gaussian(const GaussianWigner& state, const PhasePoint& pt);
/// Single-mode unit Gaussian (1/pi) exp(-(q - q0)^2 - (p - p0)^2).
double eval_gaussian_mode(double q, double p, double q0, double p0);

// ---- Oscillator in a field ----

struct HoQuadraticForms {
  double plus;   ///< (lambda/kappa) r^2 + (kappa/lambda) p^2 - 2 (x p_y - y p_x)
  double minus;  ///< (lambda/kappa) r^2 + (kappa/lambda) p^2 + 2 (x p_y - y p_x)
};

HoQuadraticForms ho_quadratic_forms(const SystemParams& params, const PhasePoint& pt);
double eval_ho_stationary(const StationaryHOState& state, const PhasePoint& pt);
/// E = hbar [Omega (n1 + n2 + 1) + omega (n1 - n2)].
double ho_energy(int n1, int n2, const SystemParams& params);

// ---- Landau levels ----

/// (lambda/kappa) r^2 + (kappa/lambda) p^2 + 2 (p_x y - p_y x); positive
/// semidefinite of rank 2.
double landau_quadratic_form(const SystemParams& params, const PhasePoint& pt);
double eval_landau(const LandauState& state, const PhasePoint& pt);
/// E_n = hbar omega (2n + 1).
double landau_energy(int n, const SystemParams& params);
/// Returns `state` with N chosen so the state integrates to 1 over `box`.
LandauState normalize_landau(LandauState state, const QuadratureScheme& box);

// ---- Gravitational quantum well ----

/// E_n = -(m g^2 hbar^2 / 2)^{1/3} a_n with a_n the n-th Airy zero.
double gqw_energy(int n_y, const SystemParams& params);
/// (8 / (m g^2 hbar^2))^{1/3}, the factor mapping xi - E to the Airy argument.
double gqw_airy_scale(const SystemParams& params);
/// xi = p_y^2 / (2m) + m g y.
double gqw_xi(const SystemParams& params, double y, double py);

/// Unnormalized state with the default domain y_max = 3 E_n / (m g) and
/// py_max = sqrt(2 m * m g y_max). normalization is left at 1. Rebuild the
/// state (rather than editing params) so the cached energy stays consistent.
GQWState gqw_state_unnormalized(int n_y, const SystemParams& params, double x0, double px0);
/// gqw_state_unnormalized followed by normalize_gqw on gqw_y_scheme.
GQWState make_gqw_state(int n_y, const SystemParams& params, double x0, double px0);

/// Midpoint scheme over the declared (y, p_y) domain.
QuadratureScheme gqw_y_scheme(const GQWState& state, int nodes_per_axis = 512);

/// A_n with the integral of |A_n Ai(...)| over the scheme's (y, p_y) box equal
/// to 1. Throws ConvergenceError if extending the box (same node spacing,
/// y range doubled, p_y range at least doubled) moves the integral by more
/// than 1e-6 relative.
double normalize_gqw(const GQWState& state, const QuadratureScheme& scheme);

/// A_n Ai(scale (xi - E)): the y-sector as a function of xi.
double gqw_y_sector(const GQWState& state, double xi, std::optional<double> energy = std::nullopt);

/// Full state at time t. The (x, p_x) Gaussian is transported along the free
/// x motion (x - p_x t / m); the Airy factor depends on the conserved xi only.
/// Throws std::domain_error outside y in [0, y_max].
double eval_gqw(const GQWState& state, const PhasePoint& pt, double t = 0.0);

/// Central-difference residual of
///   [xi - (hbar^2 m g^2 / 8) d^2/dxi^2 - E] W_y = 0
/// divided by max |W_y| (= A_n * max|Ai|). `energy` overrides the E used in
/// the operator (the state keeps its own E).
double stargen_residual(const GQWState& state, double xi, double h, std::optional<double> energy = std::nullopt);

/// Evaluates any WignerState at t = 0.
double eval(const WignerState& state, const PhasePoint& pt);

}  // namespace wfield
