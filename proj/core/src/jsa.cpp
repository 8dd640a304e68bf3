#include "pdc/jsa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "pdc/constants.hpp"
#include "pdc/error.hpp"

namespace pdc {

using constants::kMicron;
using constants::kNanometer;
using constants::kSpeedOfLight;
using constants::kTwoPi;

namespace {

// exp() of anything below this is treated as an exact zero pump amplitude, and the
// pump dispersion is not evaluated there.
constexpr double kPumpCutoffExponent = -700.0;

// Grid reach multipliers, see default_grid().
constexpr double kPumpBandSigmas = 4.0;
constexpr double kSincFirstZeros = 4.0;
constexpr double kRangeMargin = 0.999;

}  // namespace

void validate(const PumpPulse& pump) {
  const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(pump.wavelength_um) || !positive(pump.bandwidth_nm) || !positive(pump.mean_power_w) ||
      !positive(pump.repetition_rate_hz))
    throw DomainError("pump wavelength, bandwidth, mean power and repetition rate must all be positive");
}

double jsa_sigma_plus(const PumpPulse& pump) {
  validate(pump);
  const double lambda = pump.wavelength_um * kMicron;
  return std::numbers::pi * kSpeedOfLight * pump.bandwidth_nm * kNanometer /
         (lambda * lambda * std::sqrt(2.0 * std::numbers::ln2));
}

double gaussian_pump_amplitude(double sigma_plus, double detuning) {
  const double exponent = -detuning * detuning / (4.0 * sigma_plus * sigma_plus);
  return std::sqrt(std::numbers::pi) / sigma_plus * std::exp(exponent);
}

double pump_spectral_amplitude(const PumpPulse& pump, double detuning) {
  return gaussian_pump_amplitude(jsa_sigma_plus(pump), detuning);
}

std::vector<double> FrequencyGrid::detunings() const {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = detuning(i);
  return out;
}

FrequencyGrid make_grid(int n, double max_detuning) {
  if (n < kMinGridPoints) throw DomainError(fmt::format("grid needs at least {} points per axis, got {}", kMinGridPoints, n));
  if (!(max_detuning > 0.0) || !std::isfinite(max_detuning))
    throw DomainError("grid half-width must be positive and finite");
  return {n, max_detuning};
}

FrequencyGrid default_grid(const PdcConfig& config, const PumpPulse& pump, int n) {
  validate(config);
  const double sigma = jsa_sigma_plus(pump);
  double reach = kPumpBandSigmas * std::sqrt(2.0) * sigma;

  const AxisDispersion pump_axis(*config.crystal, config.pump_axis, config.temperature_c);
  const AxisDispersion signal_axis(*config.crystal, config.signal_axis, config.temperature_c);
  const auto p = pump_axis.sample(config.pump_omega());
  const auto s = signal_axis.sample(config.signal_omega());
  const double ks2 = std::abs(s.k2);
  if (ks2 > 0.0) {
    reach = std::max(reach, kSincFirstZeros * std::sqrt(4.0 * std::numbers::pi / (ks2 * config.length_m)));
    // Where the Taylor phase-matching curves leave the pump band |W+| < 4 sigma.
    const double band = kPumpBandSigmas * sigma;
    const double dk1 = std::abs(p.k1 - s.k1);
    const double curvature = std::abs(p.k2 - 0.5 * s.k2);
    reach = std::max(reach, std::sqrt(2.0 * (std::sqrt(2.0) * dk1 * band + curvature * band * band) / ks2));
  }

  const auto& range = config.crystal->valid_range;
  const double ws = config.signal_omega();
  const double room = std::min(ws - constants::angular_frequency(range.max_um),
                               constants::angular_frequency(range.min_um) - ws);
  if (!(room > 0.0)) throw DomainError("signal carrier lies outside the crystal's valid range");
  return make_grid(n, std::min(reach, kRangeMargin * room));
}

FrequencyGrid resolve_grid(const PdcConfig& config, const PumpPulse& pump, const GridSpec& spec) {
  if (spec.max_detuning) return make_grid(spec.n, *spec.max_detuning);
  return default_grid(config, pump, spec.n);
}

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

JsaGrid compute_jsa(const PdcConfig& config, const PumpPulse& pump, const FrequencyGrid& grid) {
  validate(pump);
  if (std::abs(pump.wavelength_um - config.pump_wavelength_um) > 1e-12 * config.pump_wavelength_um)
    throw DomainError(fmt::format("pump wavelength {} um does not match the configuration's {} um",
                                  pump.wavelength_um, config.pump_wavelength_um));
  const PhaseMismatch mismatch(config);
  make_grid(grid.n, grid.max_detuning);

  const int n = grid.n;
  const double sigma = jsa_sigma_plus(pump);
  const double half_length = 0.5 * config.length_m;
  const double grating = mismatch.grating_vector();

  std::vector<double> signal_k(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) signal_k[static_cast<std::size_t>(i)] = mismatch.signal_wavevector(grid.detuning(i));

  // W_i + W_j depends on i + j only, so the pump side is tabulated on 2n - 1 sums.
  std::vector<double> pump_amp(static_cast<std::size_t>(2 * n - 1), 0.0);
  std::vector<double> pump_k(static_cast<std::size_t>(2 * n - 1), 0.0);
  for (int sum = 0; sum < 2 * n - 1; ++sum) {
    const double detuning = -2.0 * grid.max_detuning + sum * grid.step();
    const double exponent = -detuning * detuning / (4.0 * sigma * sigma);
    if (exponent < kPumpCutoffExponent) continue;
    pump_amp[static_cast<std::size_t>(sum)] = std::sqrt(std::numbers::pi) / sigma * std::exp(exponent);
    pump_k[static_cast<std::size_t>(sum)] = mismatch.pump_wavevector(detuning);
  }

  JsaGrid out;
  out.values = Eigen::MatrixXcd::Zero(n, n);
  out.grid = grid;
  out.config = config;
  out.poling_period_um = mismatch.poling_period_um();
  out.reference = pump.reference;

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto sum = static_cast<std::size_t>(i + j);
      if (pump_amp[sum] == 0.0) continue;
      const double delta =
          pump_k[sum] - (signal_k[static_cast<std::size_t>(i)] + signal_k[static_cast<std::size_t>(j)]) - grating;
      const double x = delta * half_length;
      std::complex<double> value = pump_amp[sum] * sinc(x);
      if (pump.reference == PumpReference::kCrystalInput) value *= std::polar(1.0, x);
      out.values(i, j) = value;
      out.values(j, i) = value;
    }
  }
  return out;
}

SchmidtDecomposition schmidt_decompose(const JsaGrid& jsa, const SchmidtOptions& options) {
  const auto& values = jsa.values;
  if (values.rows() != jsa.grid.n || values.cols() != jsa.grid.n)
    throw DomainError("JSA matrix shape does not match its grid");
  if (!values.allFinite()) throw DomainError("JSA contains non-finite entries");
  if (values.cwiseAbs().maxCoeff() == 0.0) throw DomainError("cannot decompose an all-zero JSA");

  const double weight = jsa.grid.step() / kTwoPi;
  const Eigen::MatrixXcd kernel = values * weight;
  const unsigned flags = options.compute_modes ? (Eigen::ComputeThinU | Eigen::ComputeThinV) : 0u;
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(kernel, flags);
  const Eigen::VectorXd& sv = svd.singularValues();

  SchmidtDecomposition out;
  out.grid = jsa.grid;
  out.raw_norm = sv.squaredNorm();
  const double scale = std::sqrt(out.raw_norm);
  const auto count = static_cast<std::size_t>(sv.size());
  std::vector<Eigen::Index> order(count);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&sv](Eigen::Index a, Eigen::Index b) { return sv(a) > sv(b); });

  out.s.resize(count);
  double fourth = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    out.s[i] = sv(order[i]) / scale;
    fourth += out.s[i] * out.s[i] * out.s[i] * out.s[i];
  }
  out.schmidt_number = 1.0 / fourth;

  if (options.compute_modes) {
    const double to_continuum = 1.0 / std::sqrt(weight);
    const Eigen::MatrixXcd& u = svd.matrixU();
    const Eigen::MatrixXcd& v = svd.matrixV();
    out.modes.resize(u.rows(), static_cast<Eigen::Index>(count));
    out.partner_modes.resize(v.rows(), static_cast<Eigen::Index>(count));
    for (std::size_t i = 0; i < count; ++i) {
      const auto col = static_cast<Eigen::Index>(i);
      out.modes.col(col) = u.col(order[i]) * to_continuum;
      out.partner_modes.col(col) = v.col(order[i]).conjugate() * to_continuum;
    }
  }
  return out;
}

double jsa_efficiency(const JsaGrid& jsa, const SchmidtDecomposition& decomposition) {
  if (decomposition.grid.n != jsa.grid.n || decomposition.s.empty())
    throw DomainError("decomposition does not belong to this JSA");
  const double s0 = decomposition.s.front();
  return s0 * s0 * decomposition.raw_norm;
}

JsaGrid double_gaussian_jsa(double omega_p, double r, const FrequencyGrid& grid) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError(fmt::format("double-Gaussian ratio R must be >= 1, got {}", r));
  if (!(omega_p > 0.0)) throw DomainError("double-Gaussian width must be positive");
  make_grid(grid.n, grid.max_detuning);
  // The square grid contains the disc of radius max_detuning in rotated coordinates.
  if (grid.max_detuning < 4.0 * r * omega_p)
    throw DomainError(fmt::format("grid half-width {:.4g} rad/s is below 4 R omega_p = {:.4g} rad/s",
                                  grid.max_detuning, 4.0 * r * omega_p));

  const int n = grid.n;
  JsaGrid out;
  out.values = Eigen::MatrixXcd::Zero(n, n);
  out.grid = grid;
  const double minus_width = 2.0 * r * r * omega_p * omega_p;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double w1 = grid.detuning(i);
      const double w2 = grid.detuning(j);
      const double minus = (w1 - w2) / std::sqrt(2.0);
      const double value = gaussian_pump_amplitude(omega_p, w1 + w2) * std::exp(-minus * minus / minus_width);
      out.values(i, j) = value;
      out.values(j, i) = value;
    }
  }
  return out;
}

DoubleGaussianAnalytics double_gaussian_analytics(double r) {
  if (!(r >= 1.0)) throw DomainError(fmt::format("double-Gaussian ratio R must be >= 1, got {}", r));
  return {(1.0 + r * r) / (2.0 * r), r * r / ((1.0 + r) * (1.0 + r))};
}

std::vector<std::complex<double>> phase_aligned_mode(const SchmidtDecomposition& decomposition, int index) {
  if (!decomposition.has_modes()) throw DomainError("decomposition was computed without modes");
  if (index < 0 || index >= decomposition.modes.cols())
    throw DomainError(fmt::format("mode index {} out of range (0..{})", index, decomposition.modes.cols() - 1));
  const auto column = decomposition.modes.col(index);
  Eigen::Index peak = 0;
  column.cwiseAbs().maxCoeff(&peak);
  const std::complex<double> rotation = std::conj(column(peak)) / std::abs(column(peak));
  std::vector<std::complex<double>> out(static_cast<std::size_t>(column.size()));
  for (Eigen::Index i = 0; i < column.size(); ++i) out[static_cast<std::size_t>(i)] = column(i) * rotation;
  return out;
}

int real_sign_changes(std::span<const std::complex<double>> mode, double relative_floor) {
  double peak = 0.0;
  for (const auto& v : mode) peak = std::max(peak, std::abs(v.real()));
  const double floor = relative_floor * peak;
  int changes = 0;
  int last_sign = 0;
  for (const auto& v : mode) {
    if (std::abs(v.real()) <= floor) continue;
    const int sign = v.real() > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

}  // namespace pdc
