#pragma once

#include <string>

#include "pdc/crystal.hpp"

namespace pdc {

/// Reference temperature of the bundled MgO:LN model, used as "room temperature".
inline constexpr double kRoomTemperatureC = 24.5;

/// Dispersion quantities at one optical frequency, SI units.
struct DispersionSample {
  double n = 0.0;            // refractive index
  double k = 0.0;            // wavevector, rad/m
  double group_index = 0.0;  // c dk/domega
  double k1 = 0.0;           // dk/domega, s/m
  double k2 = 0.0;           // d^2k/domega^2, s^2/m
};

/// One crystal axis frozen at one temperature. Derivatives are closed-form: the
/// Sellmeier expression is differentiated in lambda and mapped to omega by the
/// chain rule, so there is no step size to tune.
///
/// Cheap to copy; holds no reference to the CrystalModel it was built from.
class AxisDispersion {
 public:
  AxisDispersion(const CrystalModel& crystal, const OpticalAxis& axis, double temperature_c);

  /// Throws DomainError when `wavelength_um` is outside the valid range.
  double index(double wavelength_um) const;

  /// Full sample at angular frequency `omega` (rad/s). Derivatives need a
  /// neighborhood, so the wavelength must lie strictly inside the valid range.
  DispersionSample sample(double omega) const;

  /// k(omega) = n(omega) omega / c in rad/m.
  double wavevector(double omega) const;

  const WavelengthRange& valid_range() const { return range_; }

 private:
  void check_range(double wavelength_um, bool strict) const;

  PoleExpansion expansion_;
  WavelengthRange range_;
  std::string where_;
};

double refractive_index(const CrystalModel& crystal, const OpticalAxis& axis, double wavelength_um,
                        double temperature_c);

/// m = c k'(omega).
double group_index(const CrystalModel& crystal, const OpticalAxis& axis, double wavelength_um,
                   double temperature_c);

/// k''(omega) in ps^2/m.
double gvd(const CrystalModel& crystal, const OpticalAxis& axis, double wavelength_um, double temperature_c);

}  // namespace pdc
