#include "wfield/ncmap.hpp"

#include <cmath>
#include <stdexcept>

namespace wfield {

void validate(const NCParams& nc) {
  if (!(std::isfinite(nc.theta) && nc.theta >= 0.0)) throw std::invalid_argument("theta must be >= 0");
  if (!(std::isfinite(nc.eta) && nc.eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
  if (!(std::isfinite(nc.mu) && nc.mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  if (!(std::isfinite(nc.nu) && nc.nu > 0.0)) throw std::invalid_argument("nu must be > 0");
}

namespace {

void require_charge(const SystemParams& params) {
  if (params.charge() == 0.0) throw std::invalid_argument("noncommutative map needs q != 0");
}

}  // namespace

double effective_b0_ho(const NCParams& nc, const SystemParams& params) {
  validate(nc);
  require_charge(params);
  const double w0 = params.natural_frequency();
  if (!(w0 > 0.0)) throw std::invalid_argument("effective_b0_ho needs omega0 > 0");
  const double m = params.mass();
  const double qh = params.charge() * params.hbar();
  return m * m * w0 * w0 * nc.theta / qh + nc.eta / qh;
}

double effective_b0_free(const NCParams& nc, const SystemParams& params) {
  validate(nc);
  require_charge(params);
  return nc.eta / (params.charge() * params.hbar());
}

GqwNcMap gqw_nc_map(const NCParams& nc, const SystemParams& params) {
  validate(nc);
  require_charge(params);
  const double hbar = params.hbar();
  return {nc.eta / (params.charge() * hbar), {nc.nu, -nc.theta / (2.0 * nc.nu * hbar)}};
}

double auxiliary_s(double mu, double nu) {
  const double product = mu * nu;
  if (!(product > 0.0) || !std::isfinite(product)) throw std::invalid_argument("auxiliary_s needs mu nu > 0");
  return 1.0 / product - 1.0;
}

bool sigma_invertible(const NCParams& nc, double hbar) {
  const double det_factor = 1.0 - nc.theta * nc.eta / (hbar * hbar);
  return std::fabs(det_factor) > 1e-12;
}

}  // namespace wfield
