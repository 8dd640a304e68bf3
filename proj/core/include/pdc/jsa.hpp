#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pdc/phasematch.hpp"

namespace pdc {

/// Plane at which the pump pulse is transform limited (flat spectral phase).
///
/// kCrystalInput gives the JSA literally as alpha(W1+W2) e^{i D L/2} sinc(D L/2).
/// kCrystalCenter, the default, moves the reference to the middle of the crystal
/// where the optimally focused waist sits; this removes the pump part of the
/// e^{i D L/2} phase and leaves alpha(W1+W2) sinc(D L/2) times single-photon
/// phases e^{-i k_s(W) L/2}, which do not change the Schmidt spectrum and are dropped.
enum class PumpReference { kCrystalCenter, kCrystalInput };

struct PumpPulse {
  double wavelength_um = 0.0;
  double bandwidth_nm = 0.0;  // intensity FWHM of the pump spectrum
  double mean_power_w = 0.0;
  double repetition_rate_hz = 0.0;
  PumpReference reference = PumpReference::kCrystalCenter;
};

void validate(const PumpPulse& pump);

/// Amplitude standard deviation of the JSA along W+ = (W1+W2)/sqrt(2), rad/s:
/// pi c dlambda / (lambda^2 sqrt(2 ln 2)).
double jsa_sigma_plus(const PumpPulse& pump);

/// Normalized pump spectral amplitude, in seconds:
///   A exp(-W^2 / (4 sigma^2)),  A = sqrt(pi)/sigma,
/// so that the integral of it over dW/(2 pi) is 1 (unit peak envelope in time).
double pump_spectral_amplitude(const PumpPulse& pump, double detuning);
double gaussian_pump_amplitude(double sigma_plus, double detuning);

inline constexpr int kDefaultGridPoints = 512;
inline constexpr int kMinGridPoints = 64;

/// Square detuning grid, identical on both axes, symmetric about zero.
struct FrequencyGrid {
  int n = kDefaultGridPoints;
  double max_detuning = 0.0;  // rad/s

  double step() const { return 2.0 * max_detuning / (n - 1); }
  double detuning(int i) const { return -max_detuning + i * step(); }
  std::vector<double> detunings() const;
};

/// Throws DomainError unless n >= 64 and max_detuning > 0.
FrequencyGrid make_grid(int n, double max_detuning);

/// Grid half-width covering the larger of the pump band (4 sqrt(2) sigma+), four
/// first-zero widths of the sinc along W- (sqrt(4 pi / (|k_s''| L))), and the
/// stretch of the phase-matching hyperbolas inside the pump band. Clipped to
/// keep every signal frequency inside the crystal's valid range.
FrequencyGrid default_grid(const PdcConfig& config, const PumpPulse& pump, int n = kDefaultGridPoints);

struct GridSpec {
  int n = kDefaultGridPoints;
  std::optional<double> max_detuning;  // rad/s; default_grid() extent when absent
};

FrequencyGrid resolve_grid(const PdcConfig& config, const PumpPulse& pump, const GridSpec& spec);

/// JSA sampled on a grid, with the gamma L prefactor removed.
struct JsaGrid {
  Eigen::MatrixXcd values;  // (i, j) -> J(W_i, W_j), exactly symmetric
  FrequencyGrid grid;
  std::optional<PdcConfig> config;  // empty for synthetic (double-Gaussian) JSAs
  double poling_period_um = 0.0;
  PumpReference reference = PumpReference::kCrystalCenter;
};

/// sin(x)/x with the removable singularity handled by its Taylor series.
double sinc(double x);

/// Throws DomainError if pump and config disagree on the pump wavelength or if a
/// grid frequency leaves the dispersion model's valid range.
JsaGrid compute_jsa(const PdcConfig& config, const PumpPulse& pump, const FrequencyGrid& grid);

struct SchmidtOptions {
  bool compute_modes = true;
};

struct SchmidtDecomposition {
  std::vector<double> s;  // normalized singular values, descending, sum of squares 1
  /// Column n holds psi_n(W_i), normalized so that sum |psi|^2 dW/(2 pi) = 1.
  Eigen::MatrixXcd modes;
  /// Column n holds the second-photon partner of psi_n (conjugated right singular
  /// vector). For a symmetric JSA it equals psi_n up to a phase.
  Eigen::MatrixXcd partner_modes;
  double schmidt_number = 0.0;
  /// Integral of |J|^2 over dW1 dW2 / (2 pi)^2 before normalization.
  double raw_norm = 0.0;
  FrequencyGrid grid;

  bool has_modes() const { return modes.cols() > 0; }
};

/// SVD of J dW/(2 pi). Throws DomainError on an all-zero or non-finite JSA.
SchmidtDecomposition schmidt_decompose(const JsaGrid& jsa, const SchmidtOptions& options = {});

/// s_0^2 times the raw norm.
double jsa_efficiency(const JsaGrid& jsa, const SchmidtDecomposition& decomposition);

/// Double-Gaussian JSA: the normalized pump amplitude with sigma = omega_p along W+
/// times exp(-W-^2 / (2 R^2 omega_p^2)). Throws DomainError if R < 1 or if the grid
/// does not reach 4 standard deviations in both rotated directions.
JsaGrid double_gaussian_jsa(double omega_p, double r, const FrequencyGrid& grid);

struct DoubleGaussianAnalytics {
  double schmidt_number = 0.0;
  double eta_jsa = 0.0;
};

/// K = (1 + R^2)/(2R), eta_JSA = R^2/(1 + R)^2. Throws DomainError if R < 1.
DoubleGaussianAnalytics double_gaussian_analytics(double r);

/// Mode rotated by a global phase so that its largest-magnitude sample is real positive.
std::vector<std::complex<double>> phase_aligned_mode(const SchmidtDecomposition& decomposition, int index);

/// Sign changes of the real part, ignoring samples below `relative_floor` x max |Re|.
int real_sign_changes(std::span<const std::complex<double>> mode, double relative_floor = 1e-3);

}  // namespace pdc
