#pragma once

#include <cmath>
#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wfield/core.hpp"
#include "wfield/quadrature.hpp"
#include "wfield/wigner.hpp"

namespace wfield {

// ---- Fidelity ----

/// Node values below this are treated as genuine negativity, not rounding.
inline constexpr double kNegativityThreshold = -1e-12;

/// F = [integral of sqrt(W1 W2)]^2 over the scheme. Values in
/// [kNegativityThreshold, 0) are clamped to zero; anything lower throws
/// NegativityError naming the state and the node.
double fidelity_quadrature(const WignerState& first, const WignerState& second, const QuadratureScheme& scheme);

/// Fidelity of two unit-width Gaussians: exp(-|c_t - c_0|^2 / 2).
double fidelity_gaussian_closed(const PhasePoint& c0, const PhasePoint& ct);

/// The printed oscillator fidelity for omega0 = 1,
///   exp[|c0|^2 (cos t cos wt - 1) + 2 (p_y0 x0 - p_x0 y0) sin t sin wt],
/// with the bare x, y of the printed form read as x0, y0.
double fidelity_ho_paper(double omega, double t, const PhasePoint& c0);

/// Hermite scheme for a Gaussian pair: centered at the midpoint of the two
/// centers, unit scale. sqrt(W1 W2) is a single Gaussian there.
QuadratureScheme gaussian_pair_scheme(const PhasePoint& c0, const PhasePoint& ct, int order = 32);

enum class FidelityForm {
  Consistent,  ///< trajectory from the self-consistent flow
  Paper,       ///< oscillator trajectory with Omega -> 1 (printed formula)
};

std::string_view to_string(FidelityForm form);

struct FidelitySample {
  double t = 0.0;
  double closed = 0.0;
  double quadrature = 0.0;
  double paper = NAN;  ///< printed HO formula; NaN unless HoField with omega0 = 1
  double abs_diff = 0.0;
};

struct FidelityCurve {
  SystemParams params;
  PhasePoint initial;
  FidelityForm form;
  std::vector<FidelitySample> samples;
};

/// Evolves the unit Gaussian centered at c0 and compares it with the initial
/// state at each time: closed form, Hermite quadrature and (for the
/// oscillator) the printed formula.
FidelityCurve fidelity_curve(const SystemParams& params, const PhasePoint& c0, std::span<const double> times,
                             int order = 32, FidelityForm form = FidelityForm::Consistent);

/// Center of the evolved Gaussian under the chosen form.
PhasePoint evolved_center(const SystemParams& params, const PhasePoint& c0, double t, FidelityForm form);

// ---- Entropy ----

enum class EntropyConvention {
  NormalizedBox,  ///< rescale |W| to unit mass on the box first
  RawBox,         ///< integrate the state as printed
};

std::string_view to_string(EntropyConvention convention);

struct EntropyResult {
  double value = 0.0;  ///< nats
  std::string scheme;
  EntropyConvention convention = EntropyConvention::RawBox;
  double box_mass = 0.0;  ///< integral of |W| over the box before any rescaling
};

/// |W| below this contributes nothing (x ln x -> 0).
inline constexpr double kEntropyFloor = 1e-300;

/// -integral |W| ln |W| over a UniformBox scheme. `density` takes node
/// coordinates (any dimension supported by the scheme).
template <class F>
  requires std::invocable<F&, std::span<const double>>
EntropyResult shannon_entropy(F&& density, const QuadratureScheme& scheme, EntropyConvention convention) {
  if (scheme.kind() != QuadratureKind::UniformBox) {
    throw std::invalid_argument("shannon_entropy needs a UniformBox scheme");
  }
  const auto sums = integrate_many<2>(
      [&](std::span<const double> z) {
        const double a = std::fabs(density(z));
        if (!std::isfinite(a)) return std::array<double, 2>{a, a};
        if (a < kEntropyFloor) return std::array<double, 2>{a, 0.0};
        return std::array<double, 2>{a, a * std::log(a)};
      },
      scheme);
  const double mass = sums[0];
  const double plogp = sums[1];
  double value = -plogp;
  if (convention == EntropyConvention::NormalizedBox) {
    if (!(mass > 0.0)) throw NumericalError("shannon_entropy: zero mass on the box");
    // -sum (w/M) ln(w/M) = -plogp / M + ln M
    value = -plogp / mass + std::log(mass);
  }
  return EntropyResult{value, scheme.describe(), convention, mass};
}

/// Entropy of a 4D state over a 4D box, axes ordered (x, y, p_x, p_y).
EntropyResult shannon_entropy(const WignerState& state, const QuadratureScheme& scheme, EntropyConvention convention);

/// Default entropy box for 4D states: [-8, 8]^4 with 81 midpoints per axis.
QuadratureScheme default_entropy_box(double half_width = 8.0, int nodes = 81);

struct EntropyPoint {
  double field = 0.0;
  double entropy = 0.0;
  double box_mass = 0.0;
  bool analytic_limit = false;  ///< value is the B0 -> 0 limit, not a quadrature
};

/// Ground-state entropy against B0 for HoField (n1 = n2 = 0) or FreeField
/// (Landau n = 0, printed prefactor). FreeField at B0 = 0 has no state; under
/// RawBox it is reported as its limit 0, under NormalizedBox it is skipped.
std::vector<EntropyPoint> entropy_vs_field(const SystemParams& base, std::span<const double> fields,
                                           const QuadratureScheme& scheme, EntropyConvention convention);

}  // namespace wfield
