#include "wfield/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wfield/dynamics.hpp"
#include "wfield/errors.hpp"

namespace wfield {

double fidelity_quadrature(const WignerState& first, const WignerState& second, const QuadratureScheme& scheme) {
  if (scheme.dims() != 4) throw std::invalid_argument("fidelity_quadrature needs a 4D scheme");
  auto checked = [](const WignerState& s, int which, std::span<const double> z, const PhasePoint& pt) {
    const double w = eval(s, pt);
    if (w < kNegativityThreshold) {
      throw NegativityError("fidelity_quadrature: state " + std::to_string(which) + " (" +
                            std::string(state_name(s)) + ") is negative (" + std::to_string(w) + ") at node " +
                            detail::describe_node(z));
    }
    return w < 0.0 ? 0.0 : w;
  };
  const double overlap = integrate(
      [&](std::span<const double> z) {
        const PhasePoint pt{z[0], z[1], z[2], z[3]};
        return std::sqrt(checked(first, 1, z, pt) * checked(second, 2, z, pt));
      },
      scheme);
  return overlap * overlap;
}

double fidelity_gaussian_closed(const PhasePoint& c0, const PhasePoint& ct) {
  return std::exp(-0.5 * squared_norm(ct - c0));
}

double fidelity_ho_paper(double omega, double t, const PhasePoint& c0) {
  const double radius2 = squared_norm(c0);
  const double angular = c0.py * c0.x - c0.px * c0.y;
  return std::exp(radius2 * (-1.0 + std::cos(t) * std::cos(omega * t)) +
                  2.0 * angular * std::sin(t) * std::sin(omega * t));
}

QuadratureScheme gaussian_pair_scheme(const PhasePoint& c0, const PhasePoint& ct, int order) {
  const PhasePoint mid = c0 * 0.5 + ct * 0.5;
  if (!is_finite(mid)) throw NumericalError("gaussian_pair_scheme: non-finite Gaussian center");
  const auto centers = mid.to_array();
  return QuadratureScheme::tensor_hermite(centers, order, 1.0);
}

std::string_view to_string(FidelityForm form) {
  return form == FidelityForm::Consistent ? "consistent" : "paper";
}

PhasePoint evolved_center(const SystemParams& params, const PhasePoint& c0, double t, FidelityForm form) {
  const TrajectorySolution sol{params, c0};
  if (form == FidelityForm::Paper && params.kind() == SystemKind::HoField) {
    return evolve_ho_at_frequency(sol, t, 1.0);
  }
  return evolve(sol, t);
}

FidelityCurve fidelity_curve(const SystemParams& params, const PhasePoint& c0, std::span<const double> times,
                             int order, FidelityForm form) {
  FidelityCurve curve{params, c0, form, std::vector<FidelitySample>(times.size())};
  const bool has_paper_form = params.kind() == SystemKind::HoField && params.natural_frequency() == 1.0;
  const double omega = derive_frequencies(params).coupling;
  const GaussianWigner initial{c0};
  // Cells are independent; the quadrature inside each one is already parallel.
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const PhasePoint ct = evolved_center(params, c0, t, form);
    FidelitySample s;
    s.t = t;
    s.closed = fidelity_gaussian_closed(c0, ct);
    s.quadrature = fidelity_quadrature(initial, GaussianWigner{ct}, gaussian_pair_scheme(c0, ct, order));
    if (has_paper_form) s.paper = fidelity_ho_paper(omega, t, c0);
    s.abs_diff = std::fabs(s.closed - s.quadrature);
    curve.samples[i] = s;
  }
  return curve;
}

std::string_view to_string(EntropyConvention convention) {
  return convention == EntropyConvention::NormalizedBox ? "normalized" : "raw";
}

EntropyResult shannon_entropy(const WignerState& state, const QuadratureScheme& scheme, EntropyConvention convention) {
  if (scheme.dims() != 4) throw std::invalid_argument("shannon_entropy(WignerState) needs a 4D box");
  return shannon_entropy([&](std::span<const double> z) { return eval(state, {z[0], z[1], z[2], z[3]}); }, scheme,
                         convention);
}

QuadratureScheme default_entropy_box(double half_width, int nodes) {
  return QuadratureScheme::cube(4, half_width, nodes);
}

std::vector<EntropyPoint> entropy_vs_field(const SystemParams& base, std::span<const double> fields,
                                           const QuadratureScheme& scheme, EntropyConvention convention) {
  if (base.kind() != SystemKind::HoField && base.kind() != SystemKind::FreeField) {
    throw std::invalid_argument("entropy_vs_field supports ho_field and free_field");
  }
  std::vector<EntropyPoint> out;
  for (double b0 : fields) {
    const SystemParams params = base.with_field(b0);
    if (params.kind() == SystemKind::FreeField && !(derive_frequencies(params).coupling > 0.0)) {
      if (convention == EntropyConvention::RawBox) out.push_back({b0, 0.0, 0.0, true});
      continue;
    }
    const WignerState state = params.kind() == SystemKind::HoField
                            ? WignerState{StationaryHOState{0, 0, params}}
                            : WignerState{LandauState{0, params, 1.0, scheme.axis(0).upper}};
    const EntropyResult r = shannon_entropy(state, scheme, convention);
    out.push_back({b0, r.value, r.box_mass, false});
  }
  return out;
}

}  // namespace wfield
