#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include "slotbrillouin/errors.hpp"
#include "slotbrillouin/field_io.hpp"

using namespace slotbrillouin;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!same_bits(a[k], b[k])) return false;
    }
    return true;
}

bool same_bits(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!same_bits(a[k].real(), b[k].real()) || !same_bits(a[k].imag(), b[k].imag())) return false;
    }
    return true;
}

// Values that are awkward to print: subnormals, signed zero, extremes and
// numbers with 17 significant digits.
std::vector<double> awkward_values(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    const double special[] = {0.0, -0.0, std::numeric_limits<double>::denorm_min(),
                              std::numeric_limits<double>::max(), -std::numeric_limits<double>::min(), 0.1,
                              1.0 / 3.0};
    for (std::size_t k = 0; k < std::size(special) && k < n; ++k) v[k] = special[k];
    return v;
}

std::vector<std::complex<double>> awkward_complex(std::size_t n, unsigned seed) {
    const auto re = awkward_values(n, seed);
    const auto im = awkward_values(n, seed + 1);
    std::vector<std::complex<double>> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = {re[k], im[k]};
    return v;
}

}  // namespace

TEST(FieldIo, MeshRoundTripIsBitExact) {
    const auto mesh = build_mesh(SlotRingGeometry{}, MeshSpec{});
    std::stringstream a;
    write_mesh(a, mesh);
    const auto back = read_mesh(a);
    EXPECT_TRUE(same_bits(back.x_edges(), mesh.x_edges()));
    EXPECT_TRUE(same_bits(back.y_edges(), mesh.y_edges()));
    EXPECT_TRUE(same_bits(back.permittivity(), mesh.permittivity()));
    EXPECT_EQ(back.regions(), mesh.regions());
    EXPECT_TRUE(same_bits(back.slot().x0, mesh.slot().x0));
    EXPECT_TRUE(same_bits(back.slot().y1, mesh.slot().y1));
    std::stringstream b;
    write_mesh(b, back);
    EXPECT_EQ(a.str(), b.str());
}

TEST(FieldIo, OpticalModeRoundTripIsBitExact) {
    OpticalMode m;
    m.nx = 7;
    m.ny = 5;
    m.ex = awkward_complex((m.ny + 1) * m.nx, 1);
    m.ey = awkward_complex(m.ny * (m.nx + 1), 3);
    m.ez = awkward_complex((m.ny + 1) * (m.nx + 1), 5);
    m.n_eff = 1.0 / 3.0 + 2.0;
    m.wavelength = 1550e-9;
    m.omega = 1.2152924037467669e15;
    m.polarization = Polarization::tm_like;
    m.slot_fraction = 0.18263;
    m.residual = 3.3e-13;
    m.guided = true;

    std::stringstream a;
    write_optical_mode(a, m);
    const auto back = read_optical_mode(a);
    EXPECT_EQ(back.nx, m.nx);
    EXPECT_EQ(back.ny, m.ny);
    EXPECT_TRUE(same_bits(back.ex, m.ex));
    EXPECT_TRUE(same_bits(back.ey, m.ey));
    EXPECT_TRUE(same_bits(back.ez, m.ez));
    EXPECT_TRUE(same_bits(back.n_eff, m.n_eff));
    EXPECT_TRUE(same_bits(back.omega, m.omega));
    EXPECT_TRUE(same_bits(back.residual, m.residual));
    EXPECT_EQ(back.polarization, m.polarization);
    EXPECT_TRUE(back.guided);
    std::stringstream b;
    write_optical_mode(b, back);
    EXPECT_EQ(a.str(), b.str());
}

TEST(FieldIo, AcousticModeRoundTripIsBitExact) {
    SlotRingGeometry g;
    for (auto bc : {TopBoundary::sealed, TopBoundary::open}) {
        auto mode = solve_acoustic_mode(g, g.slot_fill, 372, bc);
        zero_point_normalize(mode, g.slot_fill.acoustics().bulk_modulus);
        std::stringstream a;
        write_acoustic_mode(a, mode);
        const auto back = read_acoustic_mode(a);
        EXPECT_TRUE(same_bits(back.shape, mode.shape));
        EXPECT_TRUE(same_bits(back.strain, mode.strain));
        EXPECT_TRUE(same_bits(back.omega, mode.omega));
        EXPECT_TRUE(same_bits(back.zero_point_pressure, mode.zero_point_pressure));
        EXPECT_TRUE(same_bits(back.transverse_eigenvalue, mode.transverse_eigenvalue));
        EXPECT_EQ(back.boundary, bc);
        EXPECT_EQ(back.order, mode.order);
        EXPECT_TRUE(back.normalized());
        std::stringstream b;
        write_acoustic_mode(b, back);
        EXPECT_EQ(a.str(), b.str());
    }
}

TEST(FieldIo, UnnormalizedAcousticModeOmitsStrain) {
    SlotRingGeometry g;
    const auto mode = solve_acoustic_mode(g, g.slot_fill, 372, TopBoundary::sealed);
    std::stringstream a;
    write_acoustic_mode(a, mode);
    EXPECT_EQ(a.str().find("strain"), std::string::npos);
    const auto back = read_acoustic_mode(a);
    EXPECT_FALSE(back.normalized());
    EXPECT_TRUE(same_bits(back.shape, mode.shape));
}

TEST(FieldIo, MalformedInputThrowsParseError) {
    std::istringstream empty("");
    EXPECT_THROW(read_mesh(empty), ParseError);
    std::istringstream wrong_key("# slotbrillouin mesh v1\nslab 0 1 0 1\n");
    EXPECT_THROW(read_mesh(wrong_key), ParseError);
    std::istringstream bad_number("nx 2\nny 2\nwavelength abc\n");
    EXPECT_THROW(read_optical_mode(bad_number), ParseError);
    std::istringstream bad_tag("slot 0 1 0 1\nx_edges 1 2\n0 1\ny_edges 1 2\n0 1\nregions 1 1\nZ\n");
    EXPECT_THROW(read_mesh(bad_tag), ParseError);

    const auto mesh = build_mesh(SlotRingGeometry{}, MeshSpec{});
    std::stringstream full;
    write_mesh(full, mesh);
    const auto text = full.str();
    std::istringstream truncated(text.substr(0, text.size() / 2));
    EXPECT_THROW(read_mesh(truncated), ParseError);
}

TEST(FieldIo, SaveToMissingDirectoryIsIoError) {
    const auto mesh = build_mesh(SlotRingGeometry{}, MeshSpec{});
    EXPECT_THROW(save_mesh("/nonexistent-dir/x/mesh.txt", mesh), IoError);
    const auto path = std::filesystem::temp_directory_path() / "slotbrillouin_mesh_test.txt";
    save_mesh(path.string(), mesh);
    EXPECT_TRUE(std::filesystem::exists(path));
    std::filesystem::remove(path);
}
