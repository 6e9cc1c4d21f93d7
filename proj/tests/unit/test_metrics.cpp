#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "slotbrillouin/constants.hpp"
#include "slotbrillouin/errors.hpp"
#include "slotbrillouin/metrics.hpp"

using namespace slotbrillouin;

namespace {

const double g0 = to_angular(250e3);
const double kappa = to_angular(1e9);
const double big_omega = to_angular(400e6);
const double omega = angular_frequency_from_wavelength(1550e-9);

}  // namespace

TEST(Cooperativity, Endpoints) {
    EXPECT_NEAR(cooperativity(g0, kappa, big_omega / 1e5), 0.0625, 1e-6);
    EXPECT_NEAR(cooperativity(g0, kappa, big_omega / 1e8), 62.5, 1e-3);
    EXPECT_EQ(cooperativity(0.0, kappa, 1.0), 0.0);
    EXPECT_THROW(cooperativity(g0, 0.0, 1.0), DomainError);
    EXPECT_THROW(cooperativity(g0, kappa, -1.0), DomainError);
}

TEST(LasingThreshold, AroundHundredNanowatts) {
    const double gamma = big_omega / 1e4;
    const double p = lasing_threshold({g0, kappa, 0.0, gamma, omega, 0.0});
    EXPECT_GT(p, 30e-9);
    EXPECT_LT(p, 300e-9);
    // closed form hbar omega (kappa/2)^2 / (kappa_ext C0) with kappa_ext = kappa / 2
    const double c0 = 4 * g0 * g0 / (kappa * gamma);
    EXPECT_NEAR(p / (PhysicalConstants::hbar * omega * 0.25 * kappa * kappa / (0.5 * kappa * c0)), 1.0, 1e-12);
}

TEST(LasingThreshold, Scalings) {
    const double gamma = big_omega / 1e4;
    const double base = lasing_threshold({g0, kappa, 0.0, gamma, omega, 0.0});
    EXPECT_NEAR(lasing_threshold({2 * g0, kappa, 0.0, gamma, omega, 0.0}) / base, 0.25, 1e-12);
    EXPECT_NEAR(lasing_threshold({g0, kappa, 0.0, gamma, omega, 0.5 * kappa}) / base, 2.0, 1e-12);
    // P_th * C0 does not depend on g0
    for (double g : {g0, 3 * g0, 0.1 * g0}) {
        EXPECT_NEAR(lasing_threshold({g, kappa, 0.0, gamma, omega, 0.0}) * cooperativity(g, kappa, gamma),
                    base * cooperativity(g0, kappa, gamma), 1e-12 * base * cooperativity(g0, kappa, gamma));
    }
    EXPECT_THROW(lasing_threshold({0.0, kappa, 0.0, gamma, omega, 0.0}), DomainError);
    EXPECT_THROW(lasing_threshold({g0, kappa, 2 * kappa, gamma, omega, 0.0}), DomainError);
}

TEST(LasingThreshold, ThresholdPowerGivesInverseCooperativityPhotons) {
    const double gamma = big_omega / 1e4;
    const double p = lasing_threshold({g0, kappa, 0.0, gamma, omega, 0.0});
    EXPECT_NEAR(intracavity_photons(p, omega, kappa, 0.5 * kappa) * cooperativity(g0, kappa, gamma), 1.0, 1e-12);
}

TEST(ThermalOccupancy, Values) {
    EXPECT_EQ(thermal_occupancy(big_omega, 0.0), 0.0);
    EXPECT_NEAR(thermal_occupancy(big_omega, 20e-3), 0.62, 0.01);
    const double n4k = thermal_occupancy(big_omega, 4.0);
    const double classical = PhysicalConstants::k_B * 4.0 / (PhysicalConstants::hbar * big_omega);
    EXPECT_LT(std::abs(n4k / classical - 1.0), 0.05);
    EXPECT_THROW(thermal_occupancy(big_omega, -1.0), DomainError);
    EXPECT_THROW(thermal_occupancy(0.0, 1.0), DomainError);
}

TEST(Coherence, StrictInequality) {
    const auto r = coherence_check(60.0, 1.0, 0.62);
    EXPECT_TRUE(r.satisfied);
    EXPECT_NEAR(r.margin, 60.0 / 0.62, 1e-12);
    EXPECT_FALSE(coherence_check(60.0, 0.0, 0.62).satisfied);
    EXPECT_FALSE(coherence_check(60.0, 0.0, 0.0).satisfied);
    EXPECT_FALSE(coherence_check(1.0, 0.5, 0.5).satisfied);
    EXPECT_EQ(coherence_check(1.0, 1.0, 0.0).margin, std::numeric_limits<double>::infinity());
}

TEST(Sideband, StrictInequality) {
    EXPECT_FALSE(sideband_resolved(big_omega, kappa));
    EXPECT_TRUE(sideband_resolved(big_omega, to_angular(300e6)));
    EXPECT_FALSE(sideband_resolved(kappa, kappa));
}

TEST(DesignReport, CompleteMetricsIsRecomputable) {
    DesignReport r;
    r.g0 = g0;
    r.omega_b = big_omega;
    r.kappa = kappa;
    r.q_acoustic = 1e5;
    r.temperature = 20e-3;
    complete_metrics(r, omega);
    EXPECT_NEAR(r.c0 / cooperativity(r.g0, r.kappa, r.gamma), 1.0, 1e-12);
    EXPECT_NEAR(r.coherence_photons, r.occupancy / r.c0, 1e-15);
    EXPECT_FALSE(r.resolved_sideband);
    EXPECT_GT(r.threshold_power, 0.0);
}
