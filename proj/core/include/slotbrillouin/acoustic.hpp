#pragma once

#include <cstddef>
#include <vector>

#include "slotbrillouin/eigensolver.hpp"
#include "slotbrillouin/materials.hpp"
#include "slotbrillouin/mesh.hpp"

namespace slotbrillouin {

struct AcousticMeshSpec {
    int nx = 16;  // uniform cells across the slot width
    int ny = 80;  // uniform cells across the slot height
};

// First-sound pressure mode of the fluid-filled slot, travelling azimuthally
// as exp(i (m phi - Omega t)). The shape is stored at the cell centres of a
// uniform grid over the slot rectangle (same coordinates as Mesh2D).
struct AcousticMode {
    Rect slot;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<double> shape;  // p_hat, max |p_hat| = 1, index j * nx + i
    double transverse_eigenvalue = 0.0;  // (Omega/c)^2 - k^2, 1/m^2
    double omega = 0.0;                  // rad/s
    long order = 0;                      // azimuthal m
    double wavenumber = 0.0;             // m / path_radius
    double path_radius = 0.0;            // slot centreline radius
    TopBoundary boundary = TopBoundary::sealed;
    bool propagating = true;             // false for the m = 0 uniform sealed mode
    double sound_speed = 0.0;
    double bulk_modulus = 0.0;

    // Filled by zero_point_normalize.
    double zero_point_pressure = 0.0;  // p_zp, Pa
    std::vector<double> strain;        // eps_v = p_zp p_hat / K per cell

    [[nodiscard]] bool normalized() const noexcept { return zero_point_pressure > 0.0; }
    [[nodiscard]] double dx() const noexcept { return slot.width() / static_cast<double>(nx); }
    [[nodiscard]] double dy() const noexcept { return slot.height() / static_cast<double>(ny); }
    // Bilinear interpolation of p_hat at (x, y) inside the slot, honouring the
    // wall conditions (zero gradient on rigid walls, zero value on an open top).
    [[nodiscard]] double shape_at(double x, double y) const;
    [[nodiscard]] double strain_at(double x, double y) const;
};

/// Lowest `count` cross-section modes at azimuthal order m, sorted by
/// frequency. Rigid (zero normal gradient) bottom and side walls; the top is
/// rigid when sealed and pressure-free when open.
std::vector<AcousticMode> solve_acoustic_modes(const SlotRingGeometry& geometry, const Material& fluid, long order,
                                               TopBoundary boundary, int count,
                                               const AcousticMeshSpec& mesh = {},
                                               const ShiftInvertOptions& options = {});

/// Fundamental mode; see solve_acoustic_modes.
AcousticMode solve_acoustic_mode(const SlotRingGeometry& geometry, const Material& fluid, long order,
                                 TopBoundary boundary, const AcousticMeshSpec& mesh = {});

/// Scales the mode so that its strain energy, int 1/2 K eps_v^2 dV over the
/// ring (cross-section integral times 2 pi R), equals hbar Omega / 2. Returns
/// p_zp and fills mode.strain. Throws DomainError for a zero-frequency mode.
double zero_point_normalize(AcousticMode& mode, double bulk_modulus);

/// int 1/2 K eps_v^2 dV recomputed from the stored strain field.
double strain_energy(const AcousticMode& mode);

/// Gamma = Omega / Q.
double acoustic_linewidth(double omega, double quality_factor);

}  // namespace slotbrillouin
