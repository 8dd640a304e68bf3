#pragma once

#include <cmath>
#include <memory>
#include <random>

#include "pdc/crystal.hpp"
#include "pdc/jsa.hpp"
#include "pdc/phasematch.hpp"

namespace pdc::test {

inline constexpr double kCgvmTemperatureC = 10.724510128611458;

inline std::shared_ptr<const CrystalModel> bundled_crystal() {
  static const auto crystal = std::make_shared<const CrystalModel>(load_crystal_file(PDC_BUNDLED_CRYSTAL));
  return crystal;
}

inline PdcConfig make_config(double pump_um, double temperature_c, double length_mm) {
  PdcConfig c;
  c.crystal = bundled_crystal();
  c.type = PdcType::kTypeI;
  c.pump_axis = OpticalAxis::extraordinary();
  c.signal_axis = OpticalAxis::ordinary();
  c.pump_wavelength_um = pump_um;
  c.temperature_c = temperature_c;
  c.length_m = length_mm * 1e-3;
  return c;
}

// 740 nm pump, room temperature, 5 mm: far from cGVM.
inline PdcConfig walkoff_config() { return make_config(0.74, 24.5, 5.0); }

// 775 nm pump at the cGVM temperature for 1.55 um, 80 mm.
inline PdcConfig cgvm_config() { return make_config(0.775, kCgvmTemperatureC, 80.0); }

inline PumpPulse make_pump(double wavelength_um, double bandwidth_nm = 4.0, double power_w = 12e-3,
                           double rep_rate_hz = 100e6) {
  PumpPulse p;
  p.wavelength_um = wavelength_um;
  p.bandwidth_nm = bandwidth_nm;
  p.mean_power_w = power_w;
  p.repetition_rate_hz = rep_rate_hz;
  return p;
}

// Gayer et al. 2008 written out longhand, independent of the pole expansion in core.
struct GayerOracle {
  double a1, a2, a3, a4, a5, a6, b1, b2, b3, b4;

  double n(double lambda_um, double t_c) const {
    const double f = (t_c - 24.5) * (t_c + 570.82);
    const double l2 = lambda_um * lambda_um;
    const double n2 = a1 + b1 * f + (a2 + b2 * f) / (l2 - std::pow(a3 + b3 * f, 2)) + (a4 + b4 * f) / (l2 - a5 * a5) -
                      a6 * l2;
    return std::sqrt(n2);
  }
};

inline constexpr GayerOracle kGayerE{5.756, 0.0983, 0.2020, 189.32, 12.52, 1.32e-2, 2.860e-6, 4.700e-8, 6.113e-8, 1.516e-4};
inline constexpr GayerOracle kGayerO{5.653,    0.1185,   0.2091,    89.61,     10.85,
                                     1.97e-2,  7.941e-7, 3.134e-8,  -4.641e-9, -2.188e-6};

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20241019);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

}  // namespace pdc::test
