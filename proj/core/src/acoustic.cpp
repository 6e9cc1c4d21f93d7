#include "slotbrillouin/acoustic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slotbrillouin/constants.hpp"
#include "slotbrillouin/errors.hpp"

namespace slotbrillouin {

namespace {

using Triplet = Eigen::Triplet<double>;

// Five-point finite-volume -laplacian on the uniform cell-centred grid.
// Uniform spacing keeps the matrix symmetric.
SparseMatrix neg_laplacian(std::size_t nx, std::size_t ny, double dx, double dy, TopBoundary top) {
    const double cx = 1.0 / (dx * dx);
    const double cy = 1.0 / (dy * dy);
    std::vector<Triplet> t;
    t.reserve(nx * ny * 5);
    auto id = [nx](std::size_t i, std::size_t j) { return static_cast<int>(j * nx + i); };
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            double diag = 0.0;
            if (i > 0) { t.emplace_back(id(i, j), id(i - 1, j), -cx); diag += cx; }
            if (i + 1 < nx) { t.emplace_back(id(i, j), id(i + 1, j), -cx); diag += cx; }
            if (j > 0) { t.emplace_back(id(i, j), id(i, j - 1), -cy); diag += cy; }
            if (j + 1 < ny) {
                t.emplace_back(id(i, j), id(i, j + 1), -cy);
                diag += cy;
            } else if (top == TopBoundary::open) {
                diag += 2.0 * cy;  // p = 0 on the wall, half a cell away
            }
            t.emplace_back(id(i, j), id(i, j), diag);
        }
    }
    SparseMatrix m(static_cast<int>(nx * ny), static_cast<int>(nx * ny));
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

}  // namespace

double AcousticMode::shape_at(double x, double y) const {
    // Continuous cell index, centres at integers.
    const double fi = std::clamp((x - slot.x0) / dx() - 0.5, -0.5, static_cast<double>(nx) - 0.5);
    const double fj = std::clamp((y - slot.y0) / dy() - 0.5, -0.5, static_cast<double>(ny) - 0.5);
    auto value = [&](long i, long j) {
        // Ghost cells mirror the wall condition.
        i = std::clamp(i, 0L, static_cast<long>(nx) - 1);
        double sign = 1.0;
        if (j < 0) j = 0;
        if (j >= static_cast<long>(ny)) {
            j = static_cast<long>(ny) - 1;
            if (boundary == TopBoundary::open) sign = -1.0;
        }
        return sign * shape[static_cast<std::size_t>(j) * nx + static_cast<std::size_t>(i)];
    };
    const auto i0 = static_cast<long>(std::floor(fi));
    const auto j0 = static_cast<long>(std::floor(fj));
    const double ti = fi - static_cast<double>(i0);
    const double tj = fj - static_cast<double>(j0);
    return (1 - ti) * (1 - tj) * value(i0, j0) + ti * (1 - tj) * value(i0 + 1, j0) +
           (1 - ti) * tj * value(i0, j0 + 1) + ti * tj * value(i0 + 1, j0 + 1);
}

double AcousticMode::strain_at(double x, double y) const {
    if (!normalized()) throw StateError("acoustic mode is not zero-point normalized");
    return zero_point_pressure * shape_at(x, y) / bulk_modulus;
}

std::vector<AcousticMode> solve_acoustic_modes(const SlotRingGeometry& geometry, const Material& fluid, long order,
                                               TopBoundary boundary, int count, const AcousticMeshSpec& mesh,
                                               const ShiftInvertOptions& options) {
    geometry.validate();
    if (order < 0) throw DomainError("solve_acoustic_modes: azimuthal order must be >= 0");
    if (mesh.nx < 1 || mesh.ny < 2) throw DomainError("solve_acoustic_modes: acoustic mesh too small");
    const auto& props = fluid.acoustics();

    const auto nx = static_cast<std::size_t>(mesh.nx);
    const auto ny = static_cast<std::size_t>(mesh.ny);
    const double w = geometry.slot_width;
    const double h = geometry.height;
    const SparseMatrix lap = neg_laplacian(nx, ny, w / mesh.nx, h / mesh.ny, boundary);

    ShiftInvertOptions eig = options;
    eig.symmetric = true;
    // Spectrum is >= 0, so a negative shift keeps the factorization regular.
    const double shift = -0.25 * std::pow(std::numbers::pi / (2.0 * std::max(w, h)), 2);
    const auto wanted = std::min(count, static_cast<int>(nx * ny));
    const auto pairs = shift_invert_eigs(lap, shift, wanted, eig);
    const double lap_norm = norm1(lap);

    const double radius = geometry.slot_center_radius();
    const double k = static_cast<double>(order) / radius;

    std::vector<AcousticMode> modes;
    for (const auto& pair : pairs) {
        AcousticMode mode;
        mode.slot = {-0.5 * w, 0.5 * w, 0.0, h};
        mode.nx = nx;
        mode.ny = ny;
        mode.order = order;
        mode.wavenumber = k;
        mode.path_radius = radius;
        mode.boundary = boundary;
        mode.sound_speed = props.sound_speed;
        mode.bulk_modulus = props.bulk_modulus;
        double lambda = pair.value;
        // The all-rigid rectangle has an exact constant null mode.
        if (boundary == TopBoundary::sealed && std::abs(lambda) <= 1e-10 * lap_norm) lambda = 0.0;
        mode.transverse_eigenvalue = std::max(lambda, 0.0);
        mode.omega = props.sound_speed * std::sqrt(k * k + mode.transverse_eigenvalue);
        mode.propagating = mode.omega > 0.0;

        mode.shape.assign(pair.vector.data(), pair.vector.data() + pair.vector.size());
        double peak = 0.0;
        for (double v : mode.shape) {
            if (std::abs(v) > std::abs(peak) * (1.0 + 1e-9)) peak = v;
        }
        for (double& v : mode.shape) v /= peak;
        modes.push_back(std::move(mode));
    }
    std::stable_sort(modes.begin(), modes.end(),
                     [](const AcousticMode& a, const AcousticMode& b) { return a.omega < b.omega; });
    return modes;
}

AcousticMode solve_acoustic_mode(const SlotRingGeometry& geometry, const Material& fluid, long order,
                                 TopBoundary boundary, const AcousticMeshSpec& mesh) {
    return solve_acoustic_modes(geometry, fluid, order, boundary, 1, mesh).front();
}

double zero_point_normalize(AcousticMode& mode, double bulk_modulus) {
    if (!(bulk_modulus > 0.0)) throw DomainError("zero_point_normalize: bulk modulus must be positive");
    if (!(mode.omega > 0.0)) throw DomainError("zero_point_normalize: zero-frequency mode has no zero-point scale");
    double shape_sq = 0.0;
    for (double v : mode.shape) shape_sq += v * v;
    const double volume_weight = shape_sq * mode.dx() * mode.dy() * kTwoPi * mode.path_radius;
    // 1/2 K (p/K)^2 V_eff = hbar Omega / 2  =>  p^2 = hbar Omega K / V_eff
    mode.bulk_modulus = bulk_modulus;
    mode.zero_point_pressure = std::sqrt(PhysicalConstants::hbar * mode.omega * bulk_modulus / volume_weight);
    mode.strain.resize(mode.shape.size());
    for (std::size_t c = 0; c < mode.shape.size(); ++c) {
        mode.strain[c] = mode.zero_point_pressure * mode.shape[c] / bulk_modulus;
    }
    return mode.zero_point_pressure;
}

double strain_energy(const AcousticMode& mode) {
    if (!mode.normalized()) throw StateError("strain_energy: mode is not zero-point normalized");
    double sum = 0.0;
    for (double e : mode.strain) sum += 0.5 * mode.bulk_modulus * e * e * mode.dx() * mode.dy();
    return sum * kTwoPi * mode.path_radius;
}

double acoustic_linewidth(double omega, double quality_factor) {
    if (!(quality_factor > 0.0)) throw DomainError("acoustic_linewidth: Q must be positive");
    return omega / quality_factor;
}

}  // namespace slotbrillouin
