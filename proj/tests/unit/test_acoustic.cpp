#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/errors.hpp"

using namespace slotbrillouin;

namespace {

SlotRingGeometry slot(double width) {
    SlotRingGeometry g;
    g.slot_width = width;
    return g;
}

const Material& helium() { return builtin_material("helium"); }

// Rigid side walls and bottom; the top is rigid (sealed) or pressure-free (open).
double rectangle_omega(double k, double h, TopBoundary bc, int vertical_order) {
    const double ky = bc == TopBoundary::sealed ? vertical_order * std::numbers::pi / h
                                                : (vertical_order + 0.5) * std::numbers::pi / h;
    return 238.0 * std::sqrt(k * k + ky * ky);
}

}  // namespace

class RectangleOracle : public ::testing::TestWithParam<std::tuple<double, TopBoundary>> {};

TEST_P(RectangleOracle, FundamentalAndFirstOvertone) {
    const auto [width, bc] = GetParam();
    const auto g = slot(width);
    const long m = 162;
    const double k = m / g.slot_center_radius();
    const auto modes = solve_acoustic_modes(g, helium(), m, bc, 2);
    ASSERT_EQ(modes.size(), 2u);
    for (int n = 0; n < 2; ++n) {
        const double expected = rectangle_omega(k, g.height, bc, n);
        EXPECT_LT(std::abs(modes[n].omega / expected - 1.0), 1e-4)
            << "order " << n << ": " << modes[n].omega << " vs " << expected;
    }
}

INSTANTIATE_TEST_SUITE_P(Widths, RectangleOracle,
                         ::testing::Combine(::testing::Values(5e-9, 50e-9, 150e-9),
                                            ::testing::Values(TopBoundary::sealed, TopBoundary::open)));

TEST(Acoustic, SealedFundamentalIsUniform) {
    const auto g = slot(50e-9);
    const auto mode = solve_acoustic_mode(g, helium(), 162, TopBoundary::sealed);
    EXPECT_NEAR(to_hz(mode.omega), 238.0 * 162 / g.slot_center_radius() / (2 * std::numbers::pi), 1.0);
    for (double p : mode.shape) EXPECT_NEAR(p, 1.0, 1e-6);
    EXPECT_GE(mode.omega, 238.0 * mode.wavenumber * (1 - 1e-9));
    EXPECT_TRUE(mode.propagating);
}

TEST(Acoustic, OpenModeHasNodeAtTop) {
    const auto g = slot(50e-9);
    const auto mode = solve_acoustic_mode(g, helium(), 162, TopBoundary::open);
    EXPECT_GT(mode.omega, 238.0 * mode.wavenumber);
    // p ~ cos(pi y / 2h): compare with cell-centre samples
    for (std::size_t j = 0; j < mode.ny; ++j) {
        const double y = (j + 0.5) * mode.dy();
        EXPECT_NEAR(mode.shape[j * mode.nx], std::cos(std::numbers::pi * y / (2 * g.height)), 2e-4);
    }
    EXPECT_NEAR(mode.shape_at(0.0, g.height), 0.0, 1e-12);
    EXPECT_NEAR(mode.shape_at(0.0, 0.0), mode.shape[0], 1e-12);
}

TEST(Acoustic, OpenAboveSealed) {
    for (double w : {5e-9, 50e-9, 150e-9}) {
        const auto g = slot(w);
        EXPECT_GT(solve_acoustic_mode(g, helium(), 130, TopBoundary::open).omega,
                  solve_acoustic_mode(g, helium(), 130, TopBoundary::sealed).omega);
    }
}

TEST(Acoustic, ZeroOrderSealedIsStatic) {
    auto mode = solve_acoustic_mode(slot(50e-9), helium(), 0, TopBoundary::sealed);
    EXPECT_EQ(mode.omega, 0.0);
    EXPECT_FALSE(mode.propagating);
    EXPECT_THROW(zero_point_normalize(mode, 8.2e6), DomainError);
}

TEST(Acoustic, ModesOrthogonal) {
    for (auto bc : {TopBoundary::sealed, TopBoundary::open}) {
        const auto modes = solve_acoustic_modes(slot(150e-9), helium(), 100, bc, 3);
        ASSERT_EQ(modes.size(), 3u);
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                double dot = 0.0, na = 0.0, nb = 0.0;
                for (std::size_t c = 0; c < modes[a].shape.size(); ++c) {
                    dot += modes[a].shape[c] * modes[b].shape[c];
                    na += modes[a].shape[c] * modes[a].shape[c];
                    nb += modes[b].shape[c] * modes[b].shape[c];
                }
                EXPECT_LT(std::abs(dot) / std::sqrt(na * nb), 1e-8);
            }
        }
    }
}

TEST(Acoustic, ZeroPointNormalization) {
    const auto g = slot(50e-9);
    const double bulk = helium().acoustics().bulk_modulus;
    for (auto bc : {TopBoundary::sealed, TopBoundary::open}) {
        auto mode = solve_acoustic_mode(g, helium(), 162, bc);
        EXPECT_THROW((void)mode.strain_at(0, 1e-7), StateError);
        const double p = zero_point_normalize(mode, bulk);
        // independent re-integration: sum 1/2 K eps^2 dA * 2 pi R
        double e = 0.0;
        for (double s : mode.strain) e += 0.5 * bulk * s * s * mode.dx() * mode.dy();
        e *= 2 * std::numbers::pi * g.slot_center_radius();
        EXPECT_LT(std::abs(e / (0.5 * PhysicalConstants::hbar * mode.omega) - 1.0), 1e-6);
        EXPECT_LT(std::abs(strain_energy(mode) / (0.5 * PhysicalConstants::hbar * mode.omega) - 1.0), 1e-12);
        EXPECT_NEAR(mode.strain_at(0.0, 1e-9), p * mode.shape_at(0.0, 1e-9) / bulk, 1e-24);
    }
}

TEST(Acoustic, UniformModeClosedFormPressure) {
    const auto g = slot(50e-9);
    auto mode = solve_acoustic_mode(g, helium(), 162, TopBoundary::sealed);
    const double bulk = helium().acoustics().bulk_modulus;
    const double p = zero_point_normalize(mode, bulk);
    const double volume = g.slot_width * g.height * 2 * std::numbers::pi * g.slot_center_radius();
    EXPECT_NEAR(p / std::sqrt(PhysicalConstants::hbar * mode.omega * bulk / volume), 1.0, 1e-6);
    EXPECT_GT(p, 1.5);
    EXPECT_LT(p, 3.0);
}

TEST(Acoustic, PressureScalesWithVolume) {
    const double bulk = helium().acoustics().bulk_modulus;
    auto narrow = solve_acoustic_mode(slot(50e-9), helium(), 162, TopBoundary::sealed);
    auto wide = solve_acoustic_mode(slot(100e-9), helium(), 162, TopBoundary::sealed);
    const double p1 = zero_point_normalize(narrow, bulk);
    const double p2 = zero_point_normalize(wide, bulk);
    // same Omega up to the small change of centreline radius
    const double omega_ratio = wide.omega / narrow.omega;
    const double radius_ratio = wide.path_radius / narrow.path_radius;
    EXPECT_NEAR(p2 * p2 / (p1 * p1), 0.5 * omega_ratio / radius_ratio, 1e-9);
}

TEST(Acoustic, OpenHasLargerZeroPointPressure) {
    const double bulk = helium().acoustics().bulk_modulus;
    auto sealed = solve_acoustic_mode(slot(50e-9), helium(), 162, TopBoundary::sealed);
    auto open = solve_acoustic_mode(slot(50e-9), helium(), 162, TopBoundary::open);
    EXPECT_GT(zero_point_normalize(open, bulk), zero_point_normalize(sealed, bulk));
}

TEST(Acoustic, Linewidth) {
    EXPECT_NEAR(to_hz(acoustic_linewidth(to_angular(400e6), 1e5)), 4e3, 1e-9);
    EXPECT_NEAR(to_hz(acoustic_linewidth(to_angular(400e6), 1e8)), 4.0, 1e-12);
    EXPECT_LT(acoustic_linewidth(1e9, 1e300), 1e-290);
    EXPECT_THROW(acoustic_linewidth(1e9, 0.0), DomainError);
}

TEST(Acoustic, RequiresFluidData) {
    EXPECT_THROW(solve_acoustic_mode(slot(50e-9), builtin_material("silicon"), 10, TopBoundary::sealed), StateError);
    EXPECT_THROW(solve_acoustic_mode(slot(50e-9), helium(), -1, TopBoundary::sealed), DomainError);
}
