#include <gtest/gtest.h>

#include <cmath>

#include "pdc/constants.hpp"
#include "pdc/error.hpp"
#include "pdc/jsa.hpp"
#include "pdc/squeezing.hpp"
#include "support/fixtures.hpp"

namespace pdc {
namespace {

constexpr int kN = 256;

const SqueezingResult& design_point() {
  static const auto r = squeezing_spectrum(test::cgvm_config(), test::make_pump(0.775), {.n = kN});
  return r;
}

TEST(Squeezing, PulseDurationAndPeakPower) {
  const auto pump = test::make_pump(0.74);
  // 2 ln2 lambda^2 / (pi c dlambda), by hand: 0.4413 * (0.74e-6)^2 / (2.998e8 * 4e-9)
  EXPECT_NEAR(pulse_duration(pump) * 1e15, 201.4, 0.2);
  const auto p775 = test::make_pump(0.775);
  EXPECT_NEAR(peak_power(p775), 12e-3 / (100e6 * pulse_duration(p775)), 1e-9);
  EXPECT_NEAR(peak_power(p775), 542.9, 0.5);
  EXPECT_DOUBLE_EQ(pulse_energy(p775), 1.2e-10);
}

// Efficiency evaluated term by term with literal inputs.
TEST(Squeezing, EfficiencyHandEvaluation) {
  const auto c = test::cgvm_config();
  const double eta_jsa = 0.75;
  const double c0 = 299792458.0;
  const double ws = 2 * M_PI * c0 / 1.55e-6;
  const double wp = 2 * ws;
  const double ns = test::kGayerO.n(1.55, c.temperature_c);
  const double d = 4.64e-12;
  const double coupling = 4 * d * ws / (M_PI * c0 * c0 * ns);
  const double expected = coupling * coupling * wp * 0.08 / (2 * M_PI * 8.8541878128e-12) * eta_jsa;
  EXPECT_NEAR(pdc_efficiency(c, eta_jsa) / expected, 1.0, 1e-12);
}

TEST(Squeezing, DesignPoint) {
  const auto& r = design_point();
  EXPECT_NEAR(r.eta_pdc_per_w, 3.43e-3, 0.03e-3);
  EXPECT_NEAR(r.squeezing_db.front(), 11.85, 0.05);
  EXPECT_LT(r.mean_photons.front(), 4.0);
  EXPECT_NEAR(r.pump_photons_per_pulse, 4.68e8, 0.01e8);
  EXPECT_FALSE(r.beyond_validity);
}

TEST(Squeezing, ChainIdentities) {
  const auto& r = design_point();
  const double r0 = std::sqrt(r.eta_pdc_per_w * r.peak_power_w);
  EXPECT_NEAR(r.squeezing_db.front() / (20 * std::log10(std::exp(1.0)) * r0), 1.0, 1e-12);
  const double s0 = r.s.front();
  for (std::size_t n = 0; n < 10; ++n) {
    EXPECT_NEAR(r.r[n] / r.r[0], r.s[n] / s0, 1e-12);
    EXPECT_NEAR(r.r[n], 2 * std::sqrt(r.gain_parameter) * r.s[n], 1e-12 * r.r[0]);
    EXPECT_NEAR(r.mean_photons[n], std::pow(std::sinh(r.r[n]), 2), 1e-12 * (1 + r.mean_photons[n]));
  }
  EXPECT_NEAR(r.beam_waist_m,
              std::sqrt(constants::kSpeedOfLight * 0.08 /
                        (test::kGayerE.n(0.775, test::kCgvmTemperatureC) * constants::angular_frequency(0.775))),
              1e-15);
}

TEST(Squeezing, PowerScalingIsExact) {
  const auto c = test::cgvm_config();
  const auto jsa = compute_jsa(c, test::make_pump(0.775), default_grid(c, test::make_pump(0.775), 128));
  const auto d = schmidt_decompose(jsa, {.compute_modes = false});
  for (double p : {1e-3, 12e-3, 0.1}) {
    const auto a = squeezing_from_decomposition(c, test::make_pump(0.775, 4.0, p), d, jsa.poling_period_um);
    const auto b = squeezing_from_decomposition(c, test::make_pump(0.775, 4.0, 4 * p), d, jsa.poling_period_um);
    EXPECT_EQ(b.squeezing_db.front(), 2 * a.squeezing_db.front());
  }
}

TEST(Squeezing, ValidityFlagIffAboveLimit) {
  const auto c = test::cgvm_config();
  const auto pump = test::make_pump(0.775);
  const auto jsa = compute_jsa(c, pump, default_grid(c, pump, 128));
  const auto d = schmidt_decompose(jsa, {.compute_modes = false});
  for (double p : {1e-3, 5e-3, 12e-3, 13e-3, 20e-3, 50e-3}) {
    const auto r = squeezing_from_decomposition(c, test::make_pump(0.775, 4.0, p), d, jsa.poling_period_um);
    EXPECT_EQ(r.beyond_validity, r.squeezing_db.front() > kValidityLimitDb) << p;
  }
}

TEST(Squeezing, PinnedShapeGivesSqrtLength) {
  const auto pump = test::make_pump(0.775);
  const auto base = test::cgvm_config();
  const auto jsa = compute_jsa(base, pump, default_grid(base, pump, 128));
  const auto d = schmidt_decompose(jsa, {.compute_modes = false});
  const double s10 = [&] {
    auto c = base;
    c.length_m = 0.01;
    return squeezing_from_decomposition(c, pump, d, 0.0).squeezing_db.front();
  }();
  for (double l : {0.02, 0.04, 0.08}) {
    auto c = base;
    c.length_m = l;
    const double s = squeezing_from_decomposition(c, pump, d, 0.0).squeezing_db.front();
    EXPECT_NEAR(s / s10, std::sqrt(l / 0.01), 1e-12);
  }
}

TEST(Squeezing, LengthScanKeepsOrderAndMatchesSinglePoint) {
  const auto c = test::cgvm_config();
  const auto pump = test::make_pump(0.775);
  const std::vector<double> lengths{0.04, 0.01, 0.02};
  const auto scan = length_scan(c, pump, lengths, {.n = 128});
  ASSERT_EQ(scan.size(), 3u);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    EXPECT_EQ(scan[i].length_m, lengths[i]);
    auto single = c;
    single.length_m = lengths[i];
    EXPECT_EQ(scan[i].result.squeezing_db, squeezing_spectrum(single, pump, {.n = 128}).squeezing_db);
  }
}

TEST(Squeezing, ScanPropagatesErrors) {
  const std::vector<double> lengths{0.01, -0.01};
  EXPECT_THROW(length_scan(test::cgvm_config(), test::make_pump(0.775), lengths, {.n = 64}), DomainError);
}

TEST(Squeezing, InvalidPumpRejected) {
  EXPECT_THROW(pulse_duration(test::make_pump(0.775, 0.0)), DomainError);
  EXPECT_THROW(peak_power(test::make_pump(0.775, 4.0, 12e-3, 0.0)), DomainError);
}

}  // namespace
}  // namespace pdc
