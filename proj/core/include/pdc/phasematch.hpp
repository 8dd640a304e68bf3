#pragma once

#include <array>
#include <memory>
#include <optional>

#include "pdc/crystal.hpp"
#include "pdc/dispersion.hpp"

namespace pdc {

enum class PdcType { kType0, kTypeI };

struct AxisPairing {
  OpticalAxis pump;
  OpticalAxis signal;
};

/// One frequency-degenerate source design. The signal carrier is fixed at twice the
/// pump wavelength and only first-order quasi-phase matching is modeled.
struct PdcConfig {
  std::shared_ptr<const CrystalModel> crystal;
  PdcType type = PdcType::kTypeI;
  OpticalAxis pump_axis = OpticalAxis::extraordinary();
  OpticalAxis signal_axis = OpticalAxis::ordinary();
  double pump_wavelength_um = 0.0;
  double temperature_c = kRoomTemperatureC;
  double length_m = 0.0;
  /// Explicit poling period; computed for perfect QPM at the carriers when absent.
  std::optional<double> poling_period_um;

  double signal_wavelength_um() const { return 2.0 * pump_wavelength_um; }
  double pump_omega() const;
  double signal_omega() const { return 0.5 * pump_omega(); }
  AxisPairing pairing() const { return {pump_axis, signal_axis}; }
};

/// Throws DomainError if the axes contradict the PDC type, an axis is unknown,
/// or a length/period is non-positive.
void validate(const PdcConfig& config);

/// Poling period (um) cancelling the carrier mismatch: 2 pi / |k_p0 - 2 k_s0|.
/// Ignores any override stored in the config.
double poling_period(const PdcConfig& config);

/// The period actually used: the override if present, else poling_period().
double effective_poling_period(const PdcConfig& config);

/// Full-dispersion phase mismatch with the grating vector subtracted:
///   k_p(w_p + W1 + W2) - k_s(w_s + W1) - k_s(w_s + W2) - K_g.
/// K_g = 2 pi / Lambda carries the sign of the carrier mismatch, i.e. the grating
/// order that cancels it. Builds the dispersion tables once; reuse it for grids.
class PhaseMismatch {
 public:
  explicit PhaseMismatch(const PdcConfig& config);

  double operator()(double detuning1, double detuning2) const;

  double pump_wavevector(double detuning_sum) const { return pump_.wavevector(pump_omega_ + detuning_sum); }
  double signal_wavevector(double detuning) const { return signal_.wavevector(signal_omega_ + detuning); }
  double grating_vector() const { return grating_vector_; }
  double poling_period_um() const { return poling_period_um_; }

 private:
  AxisDispersion pump_;
  AxisDispersion signal_;
  double pump_omega_;
  double signal_omega_;
  double poling_period_um_;
  double grating_vector_;
};

/// Convenience wrapper around PhaseMismatch for single evaluations (rad/m).
double phase_mismatch(const PdcConfig& config, double detuning1, double detuning2);

/// Second-order Taylor coefficients of the mismatch around the carriers, SI units.
struct TaylorDispersion {
  double dk1 = 0.0;  // k_p' - k_s', s/m
  double kp2 = 0.0;  // k_p'', s^2/m
  double ks2 = 0.0;  // k_s'', s^2/m
  /// Half the separation of the two hyperbola vertices on the diagonal:
  /// sqrt(2) dk1 / (2 kp2 - ks2), so that the vertices sit at W+ = 0 and W+ = -2 W_d.
  double omega_d = 0.0;
};

/// Throws DomainError("parabolic degeneracy") when 2 kp2 == ks2.
TaylorDispersion taylor_dispersion(const PdcConfig& config);

/// sqrt(2) dk1 W+ + (kp2 - ks2/2) W+^2 - (ks2/2) W-^2 with W+- = (W1 +- W2)/sqrt(2).
double taylor_mismatch(const TaylorDispersion& taylor, double detuning1, double detuning2);

/// The two W+ roots of the Taylor mismatch at a given W-:
///   W+ = -W_d +- sqrt(W_d^2 + W-^2 / (2 kp2/ks2 - 1)).
/// Requires kp2 > ks2/2 > 0; throws DomainError otherwise.
std::array<double, 2> phasematch_hyperbola(const TaylorDispersion& taylor, double omega_minus);
std::array<double, 2> phasematch_hyperbola(const PdcConfig& config, double omega_minus);

/// tau_w = (k_p' - k_s') L / 2, seconds.
double walkoff_time(const PdcConfig& config);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Signal wavelength (um) at which the pump group index at lambda/2 equals the
/// signal group index at lambda. Throws SolverError if the difference does not
/// change sign over `bracket_um`.
double solve_cgvm(const CrystalModel& crystal, const AxisPairing& pairing, double temperature_c,
                  Interval bracket_um);

/// Group-index difference m_pump(lambda/2) - m_signal(lambda) whose root solve_cgvm finds.
double cgvm_residual(const CrystalModel& crystal, const AxisPairing& pairing, double temperature_c,
                     double signal_wavelength_um);

/// Temperature (C) at which the cGVM wavelength equals `target_um`. The inner
/// wavelength search uses `wavelength_bracket_um`, defaulting to
/// [0.8, 1.25] x target. Throws SolverError if no root is bracketed.
double solve_cgvm_temperature(const CrystalModel& crystal, const AxisPairing& pairing, double target_um,
                              Interval bracket_c, std::optional<Interval> wavelength_bracket_um = std::nullopt);

}  // namespace pdc
