#pragma once

#include <numbers>

// CODATA 2018 exact/recommended values, SI units.
namespace pdc::constants {

inline constexpr double kSpeedOfLight = 299792458.0;           // m/s
inline constexpr double kHbar = 1.054571817e-34;               // J s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kMicron = 1e-6;
inline constexpr double kNanometer = 1e-9;
inline constexpr double kPs2PerM = 1e-24;  // ps^2/m -> s^2/m

/// Angular frequency (rad/s) of light with vacuum wavelength `wavelength_um`.
constexpr double angular_frequency(double wavelength_um) {
  return kTwoPi * kSpeedOfLight / (wavelength_um * kMicron);
}

/// Vacuum wavelength (um) of light at angular frequency `omega` (rad/s).
constexpr double wavelength_um(double omega) {
  return kTwoPi * kSpeedOfLight / omega / kMicron;
}

}  // namespace pdc::constants
