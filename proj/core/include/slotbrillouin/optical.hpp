#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotbrillouin/eigensolver.hpp"
#include "slotbrillouin/mesh.hpp"

namespace slotbrillouin {

enum class Polarization : std::uint8_t { te_like, tm_like };

std::string_view to_string(Polarization p) noexcept;

// Full-vector transverse-E operator on a Yee-staggered grid.
//
//   Ex lives on horizontal cell edges (x_{i+1/2}, y_j),
//   Ey on vertical cell edges (x_i, y_{j+1/2}), Ez on nodes, Hz on cell centres.
//
// With fields ~ exp(-j beta z) the discrete eigenproblem is
//
//   Q e = beta^2 e,  Q = k0^2 eps_t + G eps_z^-1 D eps_t + Cb C
//
// where G is the node gradient, D the edge divergence, C the edge curl and Cb
// its adjoint. Normal components sit inside a single cell, so only tangential
// averages are needed (edge-length weighted for eps_t, area weighted for eps_z);
// this keeps the discrete normal D continuous across every interface. The
// outer boundary is a perfect electric conductor.
struct OpticalOperator {
    SparseMatrix matrix;
    double wavelength = 0.0;
    double k0 = 0.0;
    Mesh2D mesh;

    // Building blocks, kept for structural checks and field reconstruction.
    SparseMatrix gradient;        // interior nodes -> [Ex; Ey]
    SparseMatrix divergence;      // [Ex; Ey] -> interior nodes
    SparseMatrix curl;            // [Ex; Ey] -> cells
    SparseMatrix curl_adjoint;    // cells -> [Ex; Ey]
    Eigen::VectorXd eps_edges;    // averaged permittivity at each unknown
    Eigen::VectorXd eps_nodes;    // averaged permittivity at interior nodes
    Eigen::VectorXd edge_weights; // dual-cell area of each unknown
    Eigen::VectorXd node_weights;
    Eigen::VectorXd cell_weights;

    [[nodiscard]] std::size_t ex_count() const noexcept { return mesh.nx() * (mesh.ny() - 1); }
    [[nodiscard]] std::size_t ey_count() const noexcept { return (mesh.nx() - 1) * mesh.ny(); }
    [[nodiscard]] std::size_t size() const noexcept { return ex_count() + ey_count(); }
};

OpticalOperator assemble_operator(const Mesh2D& mesh, double wavelength);

// A guided (or box) mode of the cross-section. Field arrays include the
// boundary samples (zero on the PEC wall):
//   ex[j * nx + i]        = Ex(x_{i+1/2}, y_j),     j in [0, ny]
//   ey[j * (nx + 1) + i]  = Ey(x_i, y_{j+1/2}),     i in [0, nx]
//   ez[j * (nx + 1) + i]  = Ez(x_i, y_j)
// Normalized so that the integral of eps_r |E|^2 over the cross-section is 1.
struct OpticalMode {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<std::complex<double>> ex;
    std::vector<std::complex<double>> ey;
    std::vector<std::complex<double>> ez;
    double n_eff = 0.0;
    double wavelength = 0.0;
    double omega = 0.0;  // rad/s
    Polarization polarization = Polarization::te_like;
    double slot_fraction = 0.0;
    double residual = 0.0;
    bool guided = false;

    [[nodiscard]] double beta() const noexcept { return n_eff * kTwoPi / wavelength; }
    // Cell-averaged |E|^2 (all three components) on the mesh cells.
    [[nodiscard]] std::vector<double> cell_intensity() const;
    // Same for the transverse parts separately: {|Ex|^2, |Ey|^2}.
    [[nodiscard]] double transverse_power(bool x_component) const;
    void scale(double factor);
};

struct ModeSolveOptions {
    ShiftInvertOptions eigen;
};

/// The `count` modes with n_eff nearest `n_eff_guess`, sorted by descending
/// n_eff. Each mode is normalized, oriented (largest sample positive) and
/// classified TE-like when Ex carries more energy than Ey.
std::vector<OpticalMode> solve_modes(const OpticalOperator& op, double n_eff_guess, int count,
                                     const ModeSolveOptions& options = {});

/// Fraction of the electric energy inside the slot,
/// int_slot eps |E|^2 dA / int_all eps |E|^2 dA.
double slot_energy_fraction(const OpticalMode& mode, const Mesh2D& mesh);

/// Mirror parity of Ex about the mesh centre line: +1 even, -1 odd.
/// Meaningful only on mirror-symmetric meshes.
double ex_mirror_parity(const OpticalMode& mode);

struct ResonanceOrder {
    double exact = 0.0;
    long nearest = 0;
};

/// Azimuthal order 2 pi R n_eff / lambda of a ring mode and its nearest integer.
ResonanceOrder resonance_order(double n_eff, double radius, double wavelength);

/// Effective index a ring of radius R needs to host order m at lambda.
double index_for_order(long order, double radius, double wavelength);

/// Non-empty when order m cannot exist at (R, lambda) for any n_eff below
/// max_index (e.g. m = 186 at R = 10 um, 1550 nm needs n_eff ~ 4.6).
std::optional<std::string> check_resonance_order(long order, double radius, double wavelength, double max_index);

}  // namespace slotbrillouin
