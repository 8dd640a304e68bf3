#include "pdc/squeezing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

#include <fmt/format.h>

#include "pdc/constants.hpp"
#include "pdc/error.hpp"

namespace pdc {

using constants::kHbar;
using constants::kMicron;
using constants::kNanometer;
using constants::kPi;
using constants::kSpeedOfLight;
using constants::kVacuumPermittivity;

namespace {

constexpr double kPicometer = 1e-12;

}  // namespace

double pulse_duration(const PumpPulse& pump) {
  validate(pump);
  const double lambda = pump.wavelength_um * kMicron;
  return 2.0 * std::numbers::ln2 * lambda * lambda / (kPi * kSpeedOfLight * pump.bandwidth_nm * kNanometer);
}

double pulse_energy(const PumpPulse& pump) {
  validate(pump);
  return pump.mean_power_w / pump.repetition_rate_hz;
}

double peak_power(const PumpPulse& pump) {
  return pump.mean_power_w / (pump.repetition_rate_hz * pulse_duration(pump));
}

double beam_waist(const PdcConfig& config) {
  validate(config);
  const double n_p = refractive_index(*config.crystal, config.pump_axis, config.pump_wavelength_um, config.temperature_c);
  return std::sqrt(kSpeedOfLight * config.length_m / (n_p * config.pump_omega()));
}

double pdc_efficiency(const PdcConfig& config, double eta_jsa) {
  validate(config);
  const double n_s =
      refractive_index(*config.crystal, config.signal_axis, config.signal_wavelength_um(), config.temperature_c);
  const double d_eff = config.crystal->d_eff_pm_per_v * kPicometer;
  const double coupling = 4.0 * d_eff * config.signal_omega() / (kPi * kSpeedOfLight * kSpeedOfLight * n_s);
  return coupling * coupling * (config.pump_omega() * config.length_m / (2.0 * kPi * kVacuumPermittivity)) * eta_jsa;
}

SqueezingResult squeezing_from_decomposition(const PdcConfig& config, const PumpPulse& pump,
                                             const SchmidtDecomposition& decomposition, double poling_period_um) {
  if (decomposition.s.empty() || !(decomposition.s.front() > 0.0))
    throw DomainError("decomposition has no nonzero Schmidt coefficient");
  SqueezingResult out;
  const double s0 = decomposition.s.front();
  out.eta_jsa = s0 * s0 * decomposition.raw_norm;
  out.eta_pdc_per_w = pdc_efficiency(config, out.eta_jsa);
  out.pulse_duration_s = pulse_duration(pump);
  out.peak_power_w = peak_power(pump);
  out.beam_waist_m = beam_waist(config);
  out.schmidt_number = decomposition.schmidt_number;
  out.poling_period_um = poling_period_um;
  out.s = decomposition.s;

  const double r0 = std::sqrt(out.eta_pdc_per_w * out.peak_power_w);
  out.gain_parameter = r0 * r0 / (4.0 * s0 * s0);
  out.r.reserve(out.s.size());
  out.squeezing_db.reserve(out.s.size());
  out.mean_photons.reserve(out.s.size());
  for (double s : out.s) {
    const double r = r0 * s / s0;
    const double sh = std::sinh(r);
    out.r.push_back(r);
    out.squeezing_db.push_back(kDbPerNeper * r);
    out.mean_photons.push_back(sh * sh);
  }
  out.pump_photons_per_pulse = pulse_energy(pump) / (kHbar * config.pump_omega());
  out.beyond_validity = out.squeezing_db.front() > kValidityLimitDb;
  return out;
}

SqueezingResult squeezing_spectrum(const PdcConfig& config, const PumpPulse& pump, const GridSpec& grid) {
  const auto jsa = compute_jsa(config, pump, resolve_grid(config, pump, grid));
  const auto decomposition = schmidt_decompose(jsa, {.compute_modes = false});
  return squeezing_from_decomposition(config, pump, decomposition, jsa.poling_period_um);
}

std::vector<ScanPoint> length_scan(const PdcConfig& config, const PumpPulse& pump, std::span<const double> lengths_m,
                                   const GridSpec& grid) {
  std::vector<ScanPoint> out(lengths_m.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next++; i < lengths_m.size(); i = next++) {
      auto point_config = config;
      point_config.length_m = lengths_m[i];
      out[i] = ScanPoint{lengths_m[i], squeezing_spectrum(point_config, pump, grid)};
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(lengths_m.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w) pending.push_back(std::async(std::launch::async, worker));
  // get() rethrows the first failure after every worker has stopped.
  for (auto& f : pending) f.wait();
  for (auto& f : pending) f.get();
  return out;
}

}  // namespace pdc
