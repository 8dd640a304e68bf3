#include "pdc/dispersion.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pdc/constants.hpp"
#include "pdc/error.hpp"

namespace pdc {

using constants::kMicron;
using constants::kSpeedOfLight;
using constants::kTwoPi;

AxisDispersion::AxisDispersion(const CrystalModel& crystal, const OpticalAxis& axis, double temperature_c)
    : expansion_(crystal.axis(axis).expand(crystal.temperature_model.factor(temperature_c))),
      range_(crystal.valid_range),
      where_(fmt::format("{} axis {}", crystal.name, axis.label)) {
  if (!std::isfinite(temperature_c)) throw DomainError("temperature is not finite");
}

void AxisDispersion::check_range(double wavelength_um, bool strict) const {
  const bool ok = strict ? range_.contains_strictly(wavelength_um) : range_.contains(wavelength_um);
  if (!ok)
    throw DomainError(fmt::format("wavelength {:.6g} um is outside the valid range [{}, {}] um of {}", wavelength_um,
                                  range_.min_um, range_.max_um, where_));
}

double AxisDispersion::index(double wavelength_um) const {
  check_range(wavelength_um, false);
  return std::sqrt(expansion_.epsilon(wavelength_um * wavelength_um));
}

double AxisDispersion::wavevector(double omega) const {
  const double lambda = constants::wavelength_um(omega);
  return index(lambda) * omega / kSpeedOfLight;
}

DispersionSample AxisDispersion::sample(double omega) const {
  const double lambda = constants::wavelength_um(omega);
  check_range(lambda, true);

  // Derivatives in u = lambda^2 (um^2), then in lambda (um).
  const double u = lambda * lambda;
  const double eps = expansion_.epsilon(u);
  const double eps_u = expansion_.d_epsilon(u);
  const double eps_uu = expansion_.d2_epsilon(u);
  const double eps_l = 2.0 * lambda * eps_u;
  const double eps_ll = 2.0 * eps_u + 4.0 * u * eps_uu;

  const double n = std::sqrt(eps);
  const double n_l = eps_l / (2.0 * n);
  const double n_ll = (eps_ll - 2.0 * n_l * n_l) / (2.0 * n);

  DispersionSample s;
  s.n = n;
  s.k = n * omega / kSpeedOfLight;
  s.group_index = n - lambda * n_l;
  s.k1 = s.group_index / kSpeedOfLight;
  // k'' = lambda^3 n_ll / (2 pi c^2); the um factors of lambda^3 and n_ll leave 1e-6.
  s.k2 = lambda * lambda * lambda * n_ll * kMicron / (kTwoPi * kSpeedOfLight * kSpeedOfLight);
  return s;
}

double refractive_index(const CrystalModel& crystal, const OpticalAxis& axis, double wavelength_um,
                        double temperature_c) {
  return AxisDispersion(crystal, axis, temperature_c).index(wavelength_um);
}

double group_index(const CrystalModel& crystal, const OpticalAxis& axis, double wavelength_um,
                   double temperature_c) {
  return AxisDispersion(crystal, axis, temperature_c).sample(constants::angular_frequency(wavelength_um)).group_index;
}

double gvd(const CrystalModel& crystal, const OpticalAxis& axis, double wavelength_um, double temperature_c) {
  return AxisDispersion(crystal, axis, temperature_c).sample(constants::angular_frequency(wavelength_um)).k2 /
         constants::kPs2PerM;
}

}  // namespace pdc
