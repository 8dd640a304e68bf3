#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "pdc/constants.hpp"
#include "pdc/error.hpp"
#include "pdc/jsa.hpp"
#include "support/fixtures.hpp"

namespace pdc {
namespace {

struct CgvmCase {
  PdcConfig config = test::cgvm_config();
  PumpPulse pump = test::make_pump(0.775);
  FrequencyGrid grid = default_grid(config, pump, 256);
  JsaGrid jsa = compute_jsa(config, pump, grid);
  SchmidtDecomposition schmidt = schmidt_decompose(jsa);
};

const CgvmCase& cgvm_case() {
  static const CgvmCase f;
  return f;
}

TEST(Jsa, Sinc) {
  EXPECT_EQ(sinc(0.0), 1.0);
  EXPECT_NEAR(sinc(1e-9), 1.0, 1e-17);
  EXPECT_NEAR(sinc(constants::kPi), 0.0, 1e-16);
  EXPECT_NEAR(sinc(0.5), std::sin(0.5) / 0.5, 1e-16);
  EXPECT_EQ(sinc(-0.3), sinc(0.3));
}

TEST(Jsa, PumpAmplitudeIntegratesToOne) {
  const auto pump = test::make_pump(0.74);
  const double sigma = jsa_sigma_plus(pump);
  const double step = sigma / 200;
  double sum = 0.0;
  for (int i = -4000; i <= 4000; ++i) sum += pump_spectral_amplitude(pump, i * step) * step;
  EXPECT_NEAR(sum / constants::kTwoPi, 1.0, 1e-10);
  // intensity FWHM in wavelength maps to the amplitude width used along W+
  const double c = constants::kSpeedOfLight;
  const double expected = constants::kPi * c * 4e-9 / (std::pow(0.74e-6, 2) * std::sqrt(2 * std::log(2.0)));
  EXPECT_NEAR(sigma / expected, 1.0, 1e-12);
}

TEST(Jsa, ExactlySymmetric) {
  const auto& v = cgvm_case().jsa.values;
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < i; ++j) ASSERT_EQ(v(i, j), v(j, i));
}

TEST(Jsa, InputReferenceOnlyChangesPhase) {
  auto pump = cgvm_case().pump;
  pump.reference = PumpReference::kCrystalInput;
  const auto other = compute_jsa(cgvm_case().config, pump, cgvm_case().grid);
  EXPECT_LT((other.values.cwiseAbs() - cgvm_case().jsa.values.cwiseAbs()).cwiseAbs().maxCoeff(),
            1e-12 * cgvm_case().jsa.values.cwiseAbs().maxCoeff());
  for (int i = 0; i < other.values.rows(); ++i)
    for (int j = 0; j < i; ++j) ASSERT_EQ(other.values(i, j), other.values(j, i));
}

TEST(Jsa, SchmidtNormalization) {
  const auto& s = cgvm_case().schmidt.s;
  const double total = std::inner_product(s.begin(), s.end(), s.begin(), 0.0);
  EXPECT_NEAR(total, 1.0, 1e-9);
  EXPECT_TRUE(std::is_sorted(s.rbegin(), s.rend()));
  EXPECT_NEAR(cgvm_case().schmidt.schmidt_number, 1.0 / std::inner_product(s.begin(), s.end(), s.begin(), 0.0,
                                                                        std::plus<>(), [](double a, double b) {
                                                                          return a * a * b * b;
                                                                        }),
              1e-9);
}

TEST(Jsa, ModesOrthonormal) {
  const auto& d = cgvm_case().schmidt;
  const double w = d.grid.step() / constants::kTwoPi;
  const Eigen::MatrixXcd gram = d.modes.leftCols(8).adjoint() * d.modes.leftCols(8) * w;
  EXPECT_LT((gram - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Jsa, LeftAndRightModesAgreeInModulus) {
  const auto& d = cgvm_case().schmidt;
  EXPECT_LT((d.modes.leftCols(3).cwiseAbs() - d.partner_modes.leftCols(3).cwiseAbs()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Jsa, ReconstructsFromModes) {
  // J = sqrt(norm) sum_n s_n psi_n(W1) phi_n(W2)
  const auto& d = cgvm_case().schmidt;
  const double scale = std::sqrt(d.raw_norm);
  Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(d.grid.n, d.grid.n);
  for (std::size_t m = 0; m < d.s.size(); ++m) {
    const auto col = static_cast<Eigen::Index>(m);
    rebuilt += d.s[m] * scale * d.modes.col(col) * d.partner_modes.col(col).transpose();
  }
  const double err = (rebuilt - cgvm_case().jsa.values).cwiseAbs().maxCoeff();
  EXPECT_LT(err, 1e-8 * cgvm_case().jsa.values.cwiseAbs().maxCoeff());
}

TEST(Jsa, HermiteGaussLikeModes) {
  for (int n = 0; n < 3; ++n) {
    const auto mode = phase_aligned_mode(cgvm_case().schmidt, n);
    EXPECT_EQ(real_sign_changes(mode), n) << "mode " << n;
  }
}

TEST(Jsa, DoubleGaussianOracle) {
  const double omega_p = 1e13;
  for (double r : {1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    const auto grid = make_grid(512, 5.0 * r * omega_p);
    const auto jsa = double_gaussian_jsa(omega_p, r, grid);
    const auto d = schmidt_decompose(jsa, {.compute_modes = false});
    const auto expected = double_gaussian_analytics(r);
    EXPECT_NEAR(d.schmidt_number / expected.schmidt_number, 1.0, 1e-2) << "R = " << r;
    EXPECT_NEAR(jsa_efficiency(jsa, d) / expected.eta_jsa, 1.0, 1e-2) << "R = " << r;
    EXPECT_NEAR(d.raw_norm / (r / 4), 1.0, 1e-2) << "R = " << r;
  }
}

TEST(Jsa, DoubleGaussianAnalytics) {
  const auto a = double_gaussian_analytics(2.0);
  EXPECT_DOUBLE_EQ(a.schmidt_number, 5.0 / 4.0);
  EXPECT_DOUBLE_EQ(a.eta_jsa, 4.0 / 9.0);
  EXPECT_THROW(double_gaussian_analytics(0.5), DomainError);
}

TEST(Jsa, GridValidation) {
  EXPECT_THROW(make_grid(10, 1e13), DomainError);
  EXPECT_THROW(make_grid(128, -1.0), DomainError);
  const auto g = make_grid(65, 1.0);
  EXPECT_DOUBLE_EQ(g.detuning(0), -1.0);
  EXPECT_DOUBLE_EQ(g.detuning(64), 1.0);
  EXPECT_DOUBLE_EQ(g.detuning(32), 0.0);
}

TEST(Jsa, DecomposeRejectsBadInput) {
  auto jsa = double_gaussian_jsa(1e13, 2.0, make_grid(64, 1e14));
  auto zero = jsa;
  zero.values.setZero();
  EXPECT_THROW(schmidt_decompose(zero), DomainError);
  auto nan = jsa;
  nan.values(3, 3) = std::nan("");
  EXPECT_THROW(schmidt_decompose(nan), DomainError);
  const auto no_modes = schmidt_decompose(jsa, {.compute_modes = false});
  EXPECT_FALSE(no_modes.has_modes());
  EXPECT_THROW(phase_aligned_mode(no_modes, 0), DomainError);
}

TEST(Jsa, PumpMismatchRejected) {
  EXPECT_THROW(compute_jsa(test::walkoff_config(), test::make_pump(0.775), make_grid(64, 1e13)), DomainError);
}

}  // namespace
}  // namespace pdc
