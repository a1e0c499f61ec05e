#include "wfield/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wfield/errors.hpp"
#include "wfield/specfun.hpp"

namespace wfield {

namespace {

constexpr double kPi = std::numbers::pi;
// max |Ai(x)|, attained at x = -1.01879297...
constexpr double kAiryMax = 0.5356566560156999;

double parity_sign(int n) { return (n % 2) ? -1.0 : 1.0; }

double stiffness_ratio(const SystemParams& params) {
  const Frequencies f = derive_frequencies(params);
  return f.lambda / f.kappa;
}

}  // namespace

std::string_view state_name(const WignerState& state) {
  struct Visitor {
    std::string_view operator()(const GaussianWigner&) const { return "gaussian"; }
    std::string_view operator()(const StationaryHOState&) const { return "ho_stationary"; }
    std::string_view operator()(const LandauState&) const { return "landau"; }
    std::string_view operator()(const GQWState&) const { return "gqw"; }
  };
  return std::visit(Visitor{}, state);
}

double eval_gaussian(const GaussianWigner& state, const PhasePoint& pt) {
  return std::exp(-squared_norm(pt - state.center)) / (kPi * kPi);
}

double eval_gaussian_mode(double q, double p, double q0, double p0) {
  const double dq = q - q0;
  const double dp = p - p0;
  return std::exp(-dq * dq - dp * dp) / kPi;
}

HoQuadraticForms ho_quadratic_forms(const SystemParams& params, const PhasePoint& pt) {
  const double ratio = stiffness_ratio(params);
  if (!(ratio > 0.0)) throw std::invalid_argument("oscillator forms need Omega > 0");
  const double base = ratio * (pt.x * pt.x + pt.y * pt.y) + (pt.px * pt.px + pt.py * pt.py) / ratio;
  const double angular = pt.x * pt.py - pt.y * pt.px;  // sum_ij eps_ij r_i p_j
  return {base - 2.0 * angular, base + 2.0 * angular};
}

double eval_ho_stationary(const StationaryHOState& state, const PhasePoint& pt) {
  if (state.n1 < 0 || state.n2 < 0) throw std::invalid_argument("quantum numbers must be non-negative");
  const double hbar = state.params.hbar();
  const double ratio = stiffness_ratio(state.params);
  if (!(ratio > 0.0)) throw std::invalid_argument("eval_ho_stationary: Omega = 0");
  const double base = ratio * (pt.x * pt.x + pt.y * pt.y) + (pt.px * pt.px + pt.py * pt.py) / ratio;
  const HoQuadraticForms forms = ho_quadratic_forms(state.params, pt);
  return parity_sign(state.n1 + state.n2) / (kPi * kPi * hbar * hbar) * std::exp(-base / hbar) *
         specfun::laguerre(state.n1, forms.plus / hbar) * specfun::laguerre(state.n2, forms.minus / hbar);
}

double ho_energy(int n1, int n2, const SystemParams& params) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("quantum numbers must be non-negative");
  const Frequencies f = derive_frequencies(params);
  return params.hbar() * (f.oscillator * (n1 + n2 + 1) + f.coupling * (n1 - n2));
}

double landau_quadratic_form(const SystemParams& params, const PhasePoint& pt) {
  const double ratio = stiffness_ratio(params);
  if (!(ratio > 0.0)) throw std::invalid_argument("landau form needs omega > 0");
  // sum_ij eps_ij p_i r_j = p_x y - p_y x
  return ratio * (pt.x * pt.x + pt.y * pt.y) + (pt.px * pt.px + pt.py * pt.py) / ratio +
         2.0 * (pt.px * pt.y - pt.py * pt.x);
}

double eval_landau(const LandauState& state, const PhasePoint& pt) {
  if (state.n < 0) throw std::invalid_argument("Landau index must be non-negative");
  if (!(derive_frequencies(state.params).coupling > 0.0)) {
    throw std::invalid_argument("eval_landau: omega = 0, the quadratic form collapses");
  }
  const double hbar = state.params.hbar();
  const double form = landau_quadratic_form(state.params, pt) / hbar;
  return state.normalization * parity_sign(state.n) / (kPi * hbar) * std::exp(-form) *
         specfun::laguerre(state.n, form);
}

double landau_energy(int n, const SystemParams& params) {
  if (n < 0) throw std::invalid_argument("Landau index must be non-negative");
  return params.hbar() * derive_frequencies(params).coupling * (2.0 * n + 1.0);
}

LandauState normalize_landau(LandauState state, const QuadratureScheme& box) {
  if (box.dims() != 4) throw std::invalid_argument("normalize_landau needs a 4D scheme");
  state.normalization = 1.0;
  const double mass = integrate(
      [&](std::span<const double> z) { return eval_landau(state, {z[0], z[1], z[2], z[3]}); }, box);
  if (!(std::fabs(mass) > 0.0)) throw NumericalError("normalize_landau: box integral vanishes");
  state.normalization = 1.0 / mass;
  return state;
}

double gqw_energy(int n_y, const SystemParams& params) {
  if (n_y < 1) throw std::invalid_argument("gqw_energy: n_y must be >= 1");
  const double g = params.gravity();
  if (!(g > 0.0)) throw std::invalid_argument("gqw_energy: g = 0 has no bound states");
  const double hbar = params.hbar();
  return -std::cbrt(params.mass() * g * g * hbar * hbar / 2.0) * specfun::airy_zero(n_y);
}

double gqw_airy_scale(const SystemParams& params) {
  const double g = params.gravity();
  const double hbar = params.hbar();
  return std::cbrt(8.0 / (params.mass() * g * g * hbar * hbar));
}

double gqw_xi(const SystemParams& params, double y, double py) {
  const double m = params.mass();
  return py * py / (2.0 * m) + m * params.gravity() * y;
}

GQWState gqw_state_unnormalized(int n_y, const SystemParams& params, double x0, double px0) {
  if (params.kind() != SystemKind::GqwBallistic && params.kind() != SystemKind::GqwField) {
    throw std::invalid_argument("GQW state needs a gravitational-well system");
  }
  const double energy = gqw_energy(n_y, params);
  const double m = params.mass();
  const double mg = m * params.gravity();
  const double y_max = 3.0 * energy / mg;
  return GQWState{n_y, params, x0, px0, 1.0, energy, y_max, std::sqrt(2.0 * m * mg * y_max)};
}

GQWState make_gqw_state(int n_y, const SystemParams& params, double x0, double px0) {
  GQWState state = gqw_state_unnormalized(n_y, params, x0, px0);
  state.normalization = normalize_gqw(state, gqw_y_scheme(state));
  return state;
}

QuadratureScheme gqw_y_scheme(const GQWState& state, int nodes_per_axis) {
  const double lo[2] = {0.0, -state.py_max};
  const double hi[2] = {state.y_max, state.py_max};
  return QuadratureScheme::uniform_box(lo, hi, nodes_per_axis);
}

namespace {

double y_sector_abs_integral(const GQWState& state, const QuadratureScheme& scheme) {
  const double energy = state.energy;
  const double scale = gqw_airy_scale(state.params);
  return integrate(
      [&](std::span<const double> z) {
        return std::fabs(specfun::airy_ai(scale * (gqw_xi(state.params, z[0], z[1]) - energy)));
      },
      scheme);
}

}  // namespace

double normalize_gqw(const GQWState& state, const QuadratureScheme& scheme) {
  if (scheme.dims() != 2 || scheme.kind() != QuadratureKind::UniformBox) {
    throw std::invalid_argument("normalize_gqw needs a 2D box scheme over (y, p_y)");
  }
  const double base = y_sector_abs_integral(state, scheme);

  // Same spacing, larger box: nodes of the original box are reused exactly.
  QuadratureAxis y_axis = scheme.axis(0);
  y_axis.upper = y_axis.lower + 2.0 * (y_axis.upper - y_axis.lower);
  y_axis.order *= 2;
  QuadratureAxis p_axis = scheme.axis(1);
  const double h = (p_axis.upper - p_axis.lower) / p_axis.order;
  const int pad = (p_axis.order + 1) / 2;
  p_axis.lower -= pad * h;
  p_axis.upper += pad * h;
  p_axis.order += 2 * pad;
  const double extended = y_sector_abs_integral(state, QuadratureScheme(QuadratureKind::UniformBox, {y_axis, p_axis}));

  if (!(base > 0.0)) throw NumericalError("normalize_gqw: y-sector integral vanishes");
  const double change = std::fabs(extended - base) / base;
  if (change > 1e-6) {
    throw ConvergenceError("normalize_gqw: truncation not converged, doubling the domain changes the integral by " +
                           std::to_string(change));
  }
  return 1.0 / base;
}

double gqw_y_sector(const GQWState& state, double xi, std::optional<double> energy) {
  const double e = energy.value_or(state.energy);
  return state.normalization * specfun::airy_ai(gqw_airy_scale(state.params) * (xi - e));
}

double eval_gqw(const GQWState& state, const PhasePoint& pt, double t) {
  if (!(pt.y >= 0.0 && pt.y <= state.y_max)) {
    throw std::domain_error("eval_gqw: y = " + std::to_string(pt.y) + " outside [0, " + std::to_string(state.y_max) + "]");
  }
  const double m = state.params.mass();
  const double x_back = pt.x - pt.px * t / m;
  return eval_gaussian_mode(x_back, pt.px, state.x0, state.px0) *
         gqw_y_sector(state, gqw_xi(state.params, pt.y, pt.py));
}

double stargen_residual(const GQWState& state, double xi, double h, std::optional<double> energy) {
  if (!(h > 0.0)) throw std::invalid_argument("stargen_residual: step must be positive");
  const double e_state = state.energy;
  const double e_op = energy.value_or(e_state);
  const double m = state.params.mass();
  const double g = state.params.gravity();
  const double hbar = state.params.hbar();
  const double c = hbar * hbar * m * g * g / 8.0;
  const double w0 = gqw_y_sector(state, xi, e_state);
  const double second = (gqw_y_sector(state, xi + h, e_state) - 2.0 * w0 + gqw_y_sector(state, xi - h, e_state)) / (h * h);
  const double residual = (xi - e_op) * w0 - c * second;
  return std::fabs(residual) / (std::fabs(state.normalization) * kAiryMax);
}

double eval(const WignerState& state, const PhasePoint& pt) {
  struct Visitor {
    const PhasePoint& pt;
    double operator()(const GaussianWigner& s) const { return eval_gaussian(s, pt); }
    double operator()(const StationaryHOState& s) const { return eval_ho_stationary(s, pt); }
    double operator()(const LandauState& s) const { return eval_landau(s, pt); }
    double operator()(const GQWState& s) const { return eval_gqw(s, pt); }
  };
  return std::visit(Visitor{pt}, state);
}

}  // namespace wfield
