#pragma once

#include <span>
#include <vector>

#include "pdc/jsa.hpp"
#include "pdc/phasematch.hpp"

namespace pdc {

/// Squeezing above this is reported but flagged: the unordered-exponential
/// evolution operator behind the JSA model stops being accurate there.
inline constexpr double kValidityLimitDb = 12.0;

/// 20 log10(e): converts a squeezing parameter r to dB.
inline constexpr double kDbPerNeper = 8.6858896380650365;

struct SqueezingResult {
  double eta_jsa = 0.0;
  double eta_pdc_per_w = 0.0;
  double peak_power_w = 0.0;
  double pulse_duration_s = 0.0;
  double beam_waist_m = 0.0;
  double gain_parameter = 0.0;  // p_b
  double schmidt_number = 0.0;
  double poling_period_um = 0.0;
  std::vector<double> s;              // normalized Schmidt coefficients
  std::vector<double> r;              // per-mode squeezing parameters
  std::vector<double> squeezing_db;   // 20 log10(e) r_n
  std::vector<double> mean_photons;   // sinh^2 r_n
  double pump_photons_per_pulse = 0.0;
  bool beyond_validity = false;       // squeezing_db[0] > kValidityLimitDb
};

/// FWHM of the transform-limited Gaussian pump pulse: 2 ln2 lambda^2 / (pi c dlambda).
double pulse_duration(const PumpPulse& pump);

double pulse_energy(const PumpPulse& pump);

/// P_mean / (f_R tau_p).
double peak_power(const PumpPulse& pump);

/// Optimal-focusing waist (Rayleigh range L/2): sqrt(c L / (n_p w_p)).
double beam_waist(const PdcConfig& config);

/// (4 d_eff w_s / (pi c^2 n_s))^2 (w_p L / (2 pi eps0)) eta_jsa, in 1/W.
double pdc_efficiency(const PdcConfig& config, double eta_jsa);

/// Builds the physical squeezing figures from an already decomposed JSA.
SqueezingResult squeezing_from_decomposition(const PdcConfig& config, const PumpPulse& pump,
                                             const SchmidtDecomposition& decomposition, double poling_period_um);

/// Full pipeline: JSA -> Schmidt decomposition -> eta_JSA -> eta_PDC -> r_n.
SqueezingResult squeezing_spectrum(const PdcConfig& config, const PumpPulse& pump, const GridSpec& grid = {});

struct ScanPoint {
  double length_m = 0.0;
  SqueezingResult result;
};

/// Re-runs the whole pipeline per length (fresh grid, JSA and decomposition).
/// Points run concurrently; results come back in input order.
std::vector<ScanPoint> length_scan(const PdcConfig& config, const PumpPulse& pump, std::span<const double> lengths_m,
                                   const GridSpec& grid = {});

}  // namespace pdc
