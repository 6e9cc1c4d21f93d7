#include "slotbrillouin/optical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slotbrillouin/errors.hpp"

namespace slotbrillouin {

namespace {

using Triplet = Eigen::Triplet<double>;

// Index bookkeeping for the staggered unknowns of an nx x ny cell grid.
struct YeeIndex {
    std::size_t nx, ny;

    [[nodiscard]] long ex(std::size_t i, std::size_t j) const noexcept {  // j in [1, ny-1]
        return static_cast<long>((j - 1) * nx + i);
    }
    [[nodiscard]] long ey(std::size_t i, std::size_t j) const noexcept {  // i in [1, nx-1]
        return static_cast<long>(nx * (ny - 1) + j * (nx - 1) + (i - 1));
    }
    [[nodiscard]] long node(std::size_t i, std::size_t j) const noexcept {
        return static_cast<long>((j - 1) * (nx - 1) + (i - 1));
    }
    [[nodiscard]] long cell(std::size_t i, std::size_t j) const noexcept { return static_cast<long>(j * nx + i); }
    [[nodiscard]] long unknowns() const noexcept { return static_cast<long>(nx * (ny - 1) + (nx - 1) * ny); }
    [[nodiscard]] long nodes() const noexcept { return static_cast<long>((nx - 1) * (ny - 1)); }
    [[nodiscard]] long cells() const noexcept { return static_cast<long>(nx * ny); }
};

SparseMatrix from_triplets(long rows, long cols, const std::vector<Triplet>& t) {
    SparseMatrix m(rows, cols);
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

}  // namespace

std::string_view to_string(Polarization p) noexcept { return p == Polarization::te_like ? "TE-like" : "TM-like"; }

OpticalOperator assemble_operator(const Mesh2D& mesh, double wavelength) {
    if (!(wavelength > 0.0)) throw DomainError("assemble_operator: wavelength must be positive");
    const std::size_t nx = mesh.nx();
    const std::size_t ny = mesh.ny();
    if (nx < 2 || ny < 2) throw DomainError("assemble_operator: mesh needs at least 2 x 2 cells");
    const YeeIndex idx{nx, ny};

    // Distances between neighbouring cell centres, i.e. dual-cell widths at nodes.
    auto dxd = [&](std::size_t i) { return 0.5 * (mesh.dx(i - 1) + mesh.dx(i)); };
    auto dyd = [&](std::size_t j) { return 0.5 * (mesh.dy(j - 1) + mesh.dy(j)); };

    OpticalOperator op{.matrix = {}, .wavelength = wavelength, .k0 = kTwoPi / wavelength, .mesh = mesh,
                       .gradient = {}, .divergence = {}, .curl = {}, .curl_adjoint = {}, .eps_edges = {},
                       .eps_nodes = {}, .edge_weights = {}, .node_weights = {}, .cell_weights = {}};
    op.eps_edges.resize(idx.unknowns());
    op.edge_weights.resize(idx.unknowns());
    op.eps_nodes.resize(idx.nodes());
    op.node_weights.resize(idx.nodes());
    op.cell_weights.resize(idx.cells());

    for (std::size_t j = 1; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const double below = mesh.dy(j - 1);
            const double above = mesh.dy(j);
            op.eps_edges[idx.ex(i, j)] =
                (mesh.permittivity(i, j - 1) * below + mesh.permittivity(i, j) * above) / (below + above);
            op.edge_weights[idx.ex(i, j)] = mesh.dx(i) * dyd(j);
        }
    }
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 1; i < nx; ++i) {
            const double left = mesh.dx(i - 1);
            const double right = mesh.dx(i);
            op.eps_edges[idx.ey(i, j)] =
                (mesh.permittivity(i - 1, j) * left + mesh.permittivity(i, j) * right) / (left + right);
            op.edge_weights[idx.ey(i, j)] = dxd(i) * mesh.dy(j);
        }
    }
    for (std::size_t j = 1; j < ny; ++j) {
        for (std::size_t i = 1; i < nx; ++i) {
            const double a00 = mesh.cell_area(i - 1, j - 1);
            const double a10 = mesh.cell_area(i, j - 1);
            const double a01 = mesh.cell_area(i - 1, j);
            const double a11 = mesh.cell_area(i, j);
            op.eps_nodes[idx.node(i, j)] =
                (mesh.permittivity(i - 1, j - 1) * a00 + mesh.permittivity(i, j - 1) * a10 +
                 mesh.permittivity(i - 1, j) * a01 + mesh.permittivity(i, j) * a11) /
                (a00 + a10 + a01 + a11);
            op.node_weights[idx.node(i, j)] = dxd(i) * dyd(j);
        }
    }
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) op.cell_weights[idx.cell(i, j)] = mesh.cell_area(i, j);
    }

    std::vector<Triplet> t;

    // Gradient: interior node potential -> edges. Boundary nodes carry zero.
    t.clear();
    for (std::size_t j = 1; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const double inv = 1.0 / mesh.dx(i);
            if (i + 1 < nx) t.emplace_back(idx.ex(i, j), idx.node(i + 1, j), inv);
            if (i > 0) t.emplace_back(idx.ex(i, j), idx.node(i, j), -inv);
        }
    }
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 1; i < nx; ++i) {
            const double inv = 1.0 / mesh.dy(j);
            if (j + 1 < ny) t.emplace_back(idx.ey(i, j), idx.node(i, j + 1), inv);
            if (j > 0) t.emplace_back(idx.ey(i, j), idx.node(i, j), -inv);
        }
    }
    op.gradient = from_triplets(idx.unknowns(), idx.nodes(), t);

    // Divergence: edges -> interior nodes.
    t.clear();
    for (std::size_t j = 1; j < ny; ++j) {
        for (std::size_t i = 1; i < nx; ++i) {
            const double ix = 1.0 / dxd(i);
            const double iy = 1.0 / dyd(j);
            t.emplace_back(idx.node(i, j), idx.ex(i, j), ix);
            t.emplace_back(idx.node(i, j), idx.ex(i - 1, j), -ix);
            t.emplace_back(idx.node(i, j), idx.ey(i, j), iy);
            t.emplace_back(idx.node(i, j), idx.ey(i, j - 1), -iy);
        }
    }
    op.divergence = from_triplets(idx.nodes(), idx.unknowns(), t);

    // Curl: edges -> cells, (dEy/dx - dEx/dy).
    t.clear();
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const long c = idx.cell(i, j);
            const double ix = 1.0 / mesh.dx(i);
            const double iy = 1.0 / mesh.dy(j);
            if (i + 1 < nx) t.emplace_back(c, idx.ey(i + 1, j), ix);
            if (i > 0) t.emplace_back(c, idx.ey(i, j), -ix);
            if (j + 1 < ny) t.emplace_back(c, idx.ex(i, j + 1), -iy);
            if (j > 0) t.emplace_back(c, idx.ex(i, j), iy);
        }
    }
    op.curl = from_triplets(idx.cells(), idx.unknowns(), t);

    // Curl adjoint: cells -> edges, (-dHz/dy, dHz/dx).
    t.clear();
    for (std::size_t j = 1; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const double iy = 1.0 / dyd(j);
            t.emplace_back(idx.ex(i, j), idx.cell(i, j), -iy);
            t.emplace_back(idx.ex(i, j), idx.cell(i, j - 1), iy);
        }
    }
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 1; i < nx; ++i) {
            const double ix = 1.0 / dxd(i);
            t.emplace_back(idx.ey(i, j), idx.cell(i, j), ix);
            t.emplace_back(idx.ey(i, j), idx.cell(i - 1, j), -ix);
        }
    }
    op.curl_adjoint = from_triplets(idx.unknowns(), idx.cells(), t);

    const Eigen::VectorXd inv_eps_nodes = op.eps_nodes.cwiseInverse();
    SparseMatrix grad_div = op.gradient * inv_eps_nodes.asDiagonal() * op.divergence * op.eps_edges.asDiagonal();
    SparseMatrix curl_curl = op.curl_adjoint * op.curl;
    SparseMatrix mass(idx.unknowns(), idx.unknowns());
    {
        std::vector<Triplet> diag;
        diag.reserve(static_cast<std::size_t>(idx.unknowns()));
        for (long k = 0; k < idx.unknowns(); ++k) diag.emplace_back(k, k, op.k0 * op.k0 * op.eps_edges[k]);
        mass.setFromTriplets(diag.begin(), diag.end());
    }
    op.matrix = mass + grad_div + curl_curl;
    op.matrix.makeCompressed();
    return op;
}

std::vector<double> OpticalMode::cell_intensity() const {
    std::vector<double> out(nx * ny);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const double ex2 = 0.5 * (std::norm(ex[j * nx + i]) + std::norm(ex[(j + 1) * nx + i]));
            const double ey2 = 0.5 * (std::norm(ey[j * (nx + 1) + i]) + std::norm(ey[j * (nx + 1) + i + 1]));
            const double ez2 = 0.25 * (std::norm(ez[j * (nx + 1) + i]) + std::norm(ez[j * (nx + 1) + i + 1]) +
                                       std::norm(ez[(j + 1) * (nx + 1) + i]) +
                                       std::norm(ez[(j + 1) * (nx + 1) + i + 1]));
            out[j * nx + i] = ex2 + ey2 + ez2;
        }
    }
    return out;
}

double OpticalMode::transverse_power(bool x_component) const {
    double sum = 0.0;
    for (const auto& v : x_component ? ex : ey) sum += std::norm(v);
    return sum;
}

void OpticalMode::scale(double factor) {
    for (auto* field : {&ex, &ey, &ez}) {
        for (auto& v : *field) v *= factor;
    }
}

namespace {

OpticalMode reconstruct(const OpticalOperator& op, const EigenPair& pair) {
    const Mesh2D& mesh = op.mesh;
    const std::size_t nx = mesh.nx();
    const std::size_t ny = mesh.ny();
    const YeeIndex idx{nx, ny};

    OpticalMode mode;
    mode.nx = nx;
    mode.ny = ny;
    mode.wavelength = op.wavelength;
    mode.omega = angular_frequency_from_wavelength(op.wavelength);
    mode.n_eff = std::sqrt(pair.value) / op.k0;
    mode.residual = pair.residual;
    mode.ex.assign((ny + 1) * nx, 0.0);
    mode.ey.assign(ny * (nx + 1), 0.0);
    mode.ez.assign((ny + 1) * (nx + 1), 0.0);

    const Eigen::VectorXd& e = pair.vector;
    for (std::size_t j = 1; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) mode.ex[j * nx + i] = e[idx.ex(i, j)];
    }
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 1; i < nx; ++i) mode.ey[j * (nx + 1) + i] = e[idx.ey(i, j)];
    }
    // div(eps E_t) - j beta eps_z Ez = 0  =>  Ez = -j div(eps E_t) / (beta eps_z)
    const Eigen::VectorXd div = op.divergence * op.eps_edges.cwiseProduct(e);
    const double beta = std::sqrt(pair.value);
    for (std::size_t j = 1; j < ny; ++j) {
        for (std::size_t i = 1; i < nx; ++i) {
            const long n = idx.node(i, j);
            mode.ez[j * (nx + 1) + i] = std::complex<double>(0.0, -div[n] / (beta * op.eps_nodes[n]));
        }
    }

    const auto intensity = mode.cell_intensity();
    double energy = 0.0;
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            energy += mesh.permittivity(i, j) * intensity[j * nx + i] * mesh.cell_area(i, j);
        }
    }
    // Orient so the largest transverse sample is positive.
    double peak = 0.0;
    for (double v : e) {
        if (std::abs(v) > std::abs(peak)) peak = v;
    }
    mode.scale((peak < 0.0 ? -1.0 : 1.0) / std::sqrt(energy));

    mode.polarization =
        mode.transverse_power(true) >= mode.transverse_power(false) ? Polarization::te_like : Polarization::tm_like;
    mode.slot_fraction = slot_energy_fraction(mode, mesh);
    mode.guided = mode.n_eff > mesh.max_boundary_index() && mode.n_eff < mesh.max_index();
    return mode;
}

}  // namespace

std::vector<OpticalMode> solve_modes(const OpticalOperator& op, double n_eff_guess, int count,
                                     const ModeSolveOptions& options) {
    if (count < 1 || count > 10) throw DomainError("solve_modes: count must be in [1, 10]");
    if (!(n_eff_guess > 0.0)) throw DomainError("solve_modes: n_eff guess must be positive");
    const double shift = std::pow(n_eff_guess * op.k0, 2);
    const auto pairs = shift_invert_eigs(op.matrix, shift, count, options.eigen);

    std::vector<OpticalMode> modes;
    for (const auto& pair : pairs) {
        if (pair.value <= 0.0) continue;  // evanescent, not a propagating mode
        modes.push_back(reconstruct(op, pair));
    }
    std::stable_sort(modes.begin(), modes.end(),
                     [](const OpticalMode& a, const OpticalMode& b) { return a.n_eff > b.n_eff; });
    return modes;
}

double slot_energy_fraction(const OpticalMode& mode, const Mesh2D& mesh) {
    if (mode.nx != mesh.nx() || mode.ny != mesh.ny()) throw DomainError("slot_energy_fraction: mode/mesh mismatch");
    const auto intensity = mode.cell_intensity();
    double inside = 0.0;
    double total = 0.0;
    for (std::size_t j = 0; j < mesh.ny(); ++j) {
        for (std::size_t i = 0; i < mesh.nx(); ++i) {
            const double u = mesh.permittivity(i, j) * intensity[j * mesh.nx() + i] * mesh.cell_area(i, j);
            total += u;
            if (mesh.region(i, j) == Region::helium_slot) inside += u;
        }
    }
    return total > 0.0 ? inside / total : 0.0;
}

double ex_mirror_parity(const OpticalMode& mode) {
    double same = 0.0;
    double norm = 0.0;
    for (std::size_t j = 0; j <= mode.ny; ++j) {
        for (std::size_t i = 0; i < mode.nx; ++i) {
            const double a = mode.ex[j * mode.nx + i].real();
            const double b = mode.ex[j * mode.nx + (mode.nx - 1 - i)].real();
            same += a * b;
            norm += a * a;
        }
    }
    return norm > 0.0 ? same / norm : 0.0;
}

ResonanceOrder resonance_order(double n_eff, double radius, double wavelength) {
    if (!(n_eff > 0.0 && radius > 0.0 && wavelength > 0.0)) {
        throw DomainError("resonance_order: inputs must be positive");
    }
    const double exact = kTwoPi * radius * n_eff / wavelength;
    return {exact, std::lround(exact)};
}

double index_for_order(long order, double radius, double wavelength) {
    return static_cast<double>(order) * wavelength / (kTwoPi * radius);
}

std::optional<std::string> check_resonance_order(long order, double radius, double wavelength, double max_index) {
    const double needed = index_for_order(order, radius, wavelength);
    if (needed <= max_index) return std::nullopt;
    std::ostringstream msg;
    msg << "azimuthal order " << order << " at R = " << radius << " m, lambda = " << wavelength
        << " m needs n_eff = " << needed << ", above the largest available index " << max_index;
    return msg.str();
}

}  // namespace slotbrillouin
