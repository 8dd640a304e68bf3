#include <gtest/gtest.h>

#include <cmath>

#include "pdc/constants.hpp"
#include "pdc/dispersion.hpp"
#include "pdc/error.hpp"
#include "support/fixtures.hpp"

namespace pdc {
namespace {

using test::kGayerE;
using test::kGayerO;

const CrystalModel& lnb() { return *test::bundled_crystal(); }

TEST(Dispersion, MatchesLonghandSellmeier) {
  for (int trial = 0; trial < 500; ++trial) {
    const double lambda = test::uniform(0.45, 4.8);
    const double t = test::uniform(0.0, 200.0);
    EXPECT_NEAR(refractive_index(lnb(), OpticalAxis::extraordinary(), lambda, t), kGayerE.n(lambda, t), 1e-9)
        << lambda << " um, " << t << " C";
    EXPECT_NEAR(refractive_index(lnb(), OpticalAxis::ordinary(), lambda, t), kGayerO.n(lambda, t), 1e-9)
        << lambda << " um, " << t << " C";
  }
}

TEST(Dispersion, KnownIndices) {
  EXPECT_NEAR(refractive_index(lnb(), OpticalAxis::extraordinary(), 0.775, 24.5), 2.17054, 1e-5);
  EXPECT_NEAR(refractive_index(lnb(), OpticalAxis::ordinary(), 1.55, 11.0), 2.20734, 1e-5);
}

// Central differences of the longhand oracle against the closed-form derivatives.
TEST(Dispersion, GroupIndexAgainstFiniteDifference) {
  constexpr double h = 1e-4;
  for (int trial = 0; trial < 200; ++trial) {
    const double lambda = test::uniform(0.5, 4.5);
    const double t = test::uniform(0.0, 150.0);
    for (const auto* oracle : {&kGayerE, &kGayerO}) {
      const auto axis = oracle == &kGayerE ? OpticalAxis::extraordinary() : OpticalAxis::ordinary();
      const double dn = (oracle->n(lambda + h, t) - oracle->n(lambda - h, t)) / (2 * h);
      const double expected = oracle->n(lambda, t) - lambda * dn;
      EXPECT_NEAR(group_index(lnb(), axis, lambda, t) / expected, 1.0, 1e-6) << lambda;
    }
  }
}

TEST(Dispersion, GvdAgainstFiniteDifference) {
  constexpr double h = 2e-3;
  for (int trial = 0; trial < 200; ++trial) {
    const double lambda = test::uniform(0.5, 4.5);
    const double t = test::uniform(0.0, 150.0);
    for (const auto* oracle : {&kGayerE, &kGayerO}) {
      const auto axis = oracle == &kGayerE ? OpticalAxis::extraordinary() : OpticalAxis::ordinary();
      const auto n = [&](double l) { return oracle->n(l, t); };
      // fourth-order five-point stencil
      const double d2n = (-n(lambda + 2 * h) + 16 * n(lambda + h) - 30 * n(lambda) + 16 * n(lambda - h) -
                          n(lambda - 2 * h)) /
                         (12 * h * h) * 1e12;
      const double lambda_m = lambda * 1e-6;
      const double c = constants::kSpeedOfLight;
      const double expected = std::pow(lambda_m, 3) / (2 * constants::kPi * c * c) * d2n / constants::kPs2PerM;
      const double got = gvd(lnb(), axis, lambda, t);
      // floor: zero GVD near 1.9 um on the o axis
      EXPECT_NEAR(got, expected, 1e-5 * std::max(1e-3, std::abs(expected))) << lambda;
    }
  }
}

TEST(Dispersion, SampleIsConsistentWithFreeFunctions) {
  const AxisDispersion ax(lnb(), OpticalAxis::ordinary(), 30.0);
  const auto s = ax.sample(constants::angular_frequency(1.3));
  EXPECT_DOUBLE_EQ(s.n, refractive_index(lnb(), OpticalAxis::ordinary(), 1.3, 30.0));
  EXPECT_NEAR(s.group_index, s.k1 * constants::kSpeedOfLight, 1e-12);
  EXPECT_NEAR(s.k, s.n * constants::angular_frequency(1.3) / constants::kSpeedOfLight, 1e-6);
}

TEST(Dispersion, ContinuousInTemperature) {
  const double lambda = 1.55;
  for (double t = 0.0; t < 200.0; t += 7.3) {
    const double a = refractive_index(lnb(), OpticalAxis::extraordinary(), lambda, t);
    const double b = refractive_index(lnb(), OpticalAxis::extraordinary(), lambda, t + 1e-6);
    EXPECT_LT(std::abs(a - b), 1e-9);
  }
}

TEST(Dispersion, WavelengthFrequencyRoundTrip) {
  for (double lambda : {0.4, 0.775, 1.55, 3.3, 5.0})
    EXPECT_NEAR(constants::wavelength_um(constants::angular_frequency(lambda)), lambda, 1e-14);
}

TEST(Dispersion, PureFunction) {
  const double a = gvd(lnb(), OpticalAxis::ordinary(), 1.48, 24.5);
  const double b = gvd(lnb(), OpticalAxis::ordinary(), 1.48, 24.5);
  EXPECT_EQ(a, b);
}

TEST(Dispersion, OutOfRangeIsDomainError) {
  EXPECT_THROW(refractive_index(lnb(), OpticalAxis::ordinary(), 0.3, 24.5), DomainError);
  EXPECT_THROW(refractive_index(lnb(), OpticalAxis::ordinary(), 5.5, 24.5), DomainError);
  EXPECT_NO_THROW(refractive_index(lnb(), OpticalAxis::ordinary(), 5.0, 24.5));
}

TEST(Dispersion, UnknownAxisIsDomainError) {
  EXPECT_THROW(refractive_index(lnb(), OpticalAxis{"z"}, 1.0, 24.5), DomainError);
}

}  // namespace
}  // namespace pdc
