#include "pdc/phasematch.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "pdc/constants.hpp"
#include "pdc/error.hpp"

namespace pdc {

using constants::kMicron;
using constants::kTwoPi;

namespace {

constexpr double kWavelengthToleranceUm = 1e-10;
constexpr double kTemperatureToleranceC = 1e-6;
constexpr std::uintmax_t kMaxRootIterations = 200;

/// Bracketed root refinement (TOMS 748: bisection safeguarded inverse
/// quadratic/cubic interpolation). Throws SolverError when f(lo) and f(hi) share a sign.
template <typename F>
double bracketed_root(F&& f, Interval bracket, double tolerance, std::string_view what) {
  if (!(bracket.hi > bracket.lo))
    throw SolverError(fmt::format("no {}: empty bracket [{}, {}]", what, bracket.lo, bracket.hi));
  const double f_lo = f(bracket.lo);
  const double f_hi = f(bracket.hi);
  if (f_lo == 0.0) return bracket.lo;
  if (f_hi == 0.0) return bracket.hi;
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw SolverError(fmt::format("no {} in [{}, {}]: residual does not change sign ({:.3g}, {:.3g})", what,
                                  bracket.lo, bracket.hi, f_lo, f_hi));
  std::uintmax_t iterations = kMaxRootIterations;
  const auto done = [tolerance](double a, double b) { return std::abs(b - a) <= tolerance; };
  const auto [a, b] = boost::math::tools::toms748_solve(f, bracket.lo, bracket.hi, f_lo, f_hi, done, iterations);
  if (iterations >= kMaxRootIterations)
    throw SolverError(fmt::format("{} search did not converge in {} iterations", what, kMaxRootIterations));
  return 0.5 * (a + b);
}

double carrier_mismatch(const AxisDispersion& pump, const AxisDispersion& signal, double pump_omega) {
  const double ks = signal.wavevector(0.5 * pump_omega);
  return pump.wavevector(pump_omega) - (ks + ks);
}

const PdcConfig& validated(const PdcConfig& config) {
  validate(config);
  return config;
}

}  // namespace

double PdcConfig::pump_omega() const { return constants::angular_frequency(pump_wavelength_um); }

void validate(const PdcConfig& config) {
  if (!config.crystal) throw DomainError("PDC configuration has no crystal");
  config.crystal->axis(config.pump_axis);
  config.crystal->axis(config.signal_axis);
  const bool same_axis = config.pump_axis == config.signal_axis;
  if (config.type == PdcType::kType0 && !same_axis)
    throw DomainError("type-0 PDC requires the pump and signal on the same axis");
  if (config.type == PdcType::kTypeI && same_axis)
    throw DomainError("type-I PDC requires the pump and signal on different axes");
  if (!(config.pump_wavelength_um > 0.0) || !std::isfinite(config.pump_wavelength_um))
    throw DomainError("pump wavelength must be positive");
  if (!std::isfinite(config.temperature_c)) throw DomainError("temperature must be finite");
  if (!(config.length_m > 0.0) || !std::isfinite(config.length_m))
    throw DomainError("crystal length must be positive");
  if (config.poling_period_um && !(*config.poling_period_um > 0.0))
    throw DomainError("poling period must be positive");
}

PhaseMismatch::PhaseMismatch(const PdcConfig& config)
    : pump_(*validated(config).crystal, config.pump_axis, config.temperature_c),
      signal_(*config.crystal, config.signal_axis, config.temperature_c),
      pump_omega_(config.pump_omega()),
      signal_omega_(config.signal_omega()) {
  const double mismatch = carrier_mismatch(pump_, signal_, pump_omega_);
  if (mismatch == 0.0 || !std::isfinite(mismatch))
    throw DomainError("QPM order -1 impossible here: the carrier mismatch k_p0 - 2 k_s0 vanishes");
  if (config.poling_period_um) {
    poling_period_um_ = *config.poling_period_um;
    grating_vector_ = std::copysign(kTwoPi / (poling_period_um_ * kMicron), mismatch);
  } else {
    poling_period_um_ = kTwoPi / std::abs(mismatch) / kMicron;
    grating_vector_ = mismatch;
  }
}

double PhaseMismatch::operator()(double detuning1, double detuning2) const {
  const double kp = pump_.wavevector(pump_omega_ + (detuning1 + detuning2));
  const double ks = signal_.wavevector(signal_omega_ + detuning1) + signal_.wavevector(signal_omega_ + detuning2);
  return kp - ks - grating_vector_;
}

double phase_mismatch(const PdcConfig& config, double detuning1, double detuning2) {
  return PhaseMismatch(config)(detuning1, detuning2);
}

double poling_period(const PdcConfig& config) {
  auto perfect = config;
  perfect.poling_period_um.reset();
  return PhaseMismatch(perfect).poling_period_um();
}

double effective_poling_period(const PdcConfig& config) { return PhaseMismatch(config).poling_period_um(); }

TaylorDispersion taylor_dispersion(const PdcConfig& config) {
  validate(config);
  const AxisDispersion pump(*config.crystal, config.pump_axis, config.temperature_c);
  const AxisDispersion signal(*config.crystal, config.signal_axis, config.temperature_c);
  const auto p = pump.sample(config.pump_omega());
  const auto s = signal.sample(config.signal_omega());

  TaylorDispersion t;
  t.dk1 = p.k1 - s.k1;
  t.kp2 = p.k2;
  t.ks2 = s.k2;
  const double curvature = 2.0 * t.kp2 - t.ks2;
  if (curvature == 0.0 || std::abs(curvature) <= 1e-12 * (std::abs(t.kp2) + std::abs(t.ks2)))
    throw DomainError("parabolic degeneracy: 2 k_p'' = k_s'', the hyperbola vertex offset is undefined");
  t.omega_d = std::sqrt(2.0) * t.dk1 / curvature;
  return t;
}

double taylor_mismatch(const TaylorDispersion& t, double detuning1, double detuning2) {
  const double plus = (detuning1 + detuning2) / std::sqrt(2.0);
  const double minus = (detuning1 - detuning2) / std::sqrt(2.0);
  return std::sqrt(2.0) * t.dk1 * plus + (t.kp2 - 0.5 * t.ks2) * plus * plus - 0.5 * t.ks2 * minus * minus;
}

std::array<double, 2> phasematch_hyperbola(const TaylorDispersion& t, double omega_minus) {
  if (!(t.ks2 > 0.0) || !(2.0 * t.kp2 > t.ks2))
    throw DomainError(fmt::format("hyperbola regime requires k_p'' > k_s''/2 > 0 (k_p'' = {:.4g}, k_s'' = {:.4g} s^2/m)",
                                  t.kp2, t.ks2));
  const double ratio = 2.0 * t.kp2 / t.ks2 - 1.0;
  const double root = std::sqrt(t.omega_d * t.omega_d + omega_minus * omega_minus / ratio);
  return {-t.omega_d + root, -t.omega_d - root};
}

std::array<double, 2> phasematch_hyperbola(const PdcConfig& config, double omega_minus) {
  return phasematch_hyperbola(taylor_dispersion(config), omega_minus);
}

double walkoff_time(const PdcConfig& config) { return taylor_dispersion(config).dk1 * config.length_m / 2.0; }

double cgvm_residual(const CrystalModel& crystal, const AxisPairing& pairing, double temperature_c,
                     double signal_wavelength_um) {
  return group_index(crystal, pairing.pump, 0.5 * signal_wavelength_um, temperature_c) -
         group_index(crystal, pairing.signal, signal_wavelength_um, temperature_c);
}

double solve_cgvm(const CrystalModel& crystal, const AxisPairing& pairing, double temperature_c,
                  Interval bracket_um) {
  const AxisDispersion pump(crystal, pairing.pump, temperature_c);
  const AxisDispersion signal(crystal, pairing.signal, temperature_c);
  const auto residual = [&](double lambda) {
    return pump.sample(constants::angular_frequency(0.5 * lambda)).group_index -
           signal.sample(constants::angular_frequency(lambda)).group_index;
  };
  return bracketed_root(residual, bracket_um, kWavelengthToleranceUm, "cGVM point");
}

double solve_cgvm_temperature(const CrystalModel& crystal, const AxisPairing& pairing, double target_um,
                              Interval bracket_c, std::optional<Interval> wavelength_bracket_um) {
  if (!(target_um > 0.0)) throw DomainError("target wavelength must be positive");
  const Interval inner = wavelength_bracket_um.value_or(Interval{0.8 * target_um, 1.25 * target_um});
  const auto offset = [&](double temperature) {
    return solve_cgvm(crystal, pairing, temperature, inner) - target_um;
  };
  return bracketed_root(offset, bracket_c, kTemperatureToleranceC, "cGVM temperature");
}

}  // namespace pdc
