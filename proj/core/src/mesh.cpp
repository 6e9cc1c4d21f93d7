#include "slotbrillouin/mesh.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <ostream>
#include <sstream>

#include "slotbrillouin/errors.hpp"
#include "text_util.hpp"

namespace slotbrillouin {

namespace {

// Samples per interval used to tabulate the cumulative cell count.
constexpr int kQuadratureSamples = 4096;

double distance_to_interval(double x, double a, double b) noexcept {
    if (x < a) return a - x;
    if (x > b) return x - b;
    return 0.0;
}

std::vector<double> unique_sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double tol = 1e-12 * (v.back() - v.front());
    std::vector<double> out;
    for (double x : v) {
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    }
    return out;
}

Mesh2D paint(std::vector<double> xs, std::vector<double> ys, Region background_region,
             double background_permittivity, const std::vector<Block>& blocks, const MeshSpec& spec, Rect slot,
             double conformal_radius) {
    const std::size_t nx = xs.size() - 1;
    const std::size_t ny = ys.size() - 1;
    if (nx * ny > spec.cell_budget) {
        std::ostringstream msg;
        msg << "mesh needs " << nx << " x " << ny << " = " << nx * ny << " cells, budget is " << spec.cell_budget
            << "; try a larger background_cell or max_cell, fewer slot_cells, or a larger cell_budget";
        throw ResourceError(msg.str());
    }
    std::vector<Region> regions(nx * ny, background_region);
    std::vector<double> eps(nx * ny, background_permittivity);
    for (std::size_t j = 0; j < ny; ++j) {
        const double yc = 0.5 * (ys[j] + ys[j + 1]);
        for (std::size_t i = 0; i < nx; ++i) {
            const double xc = 0.5 * (xs[i] + xs[i + 1]);
            for (const auto& b : blocks) {
                if (b.rect.contains(xc, yc)) {
                    regions[j * nx + i] = b.region;
                    eps[j * nx + i] = b.permittivity;
                    break;
                }
            }
            if (conformal_radius > 0.0) eps[j * nx + i] *= std::exp(2.0 * xc / conformal_radius);
        }
    }
    return Mesh2D(std::move(xs), std::move(ys), std::move(regions), std::move(eps), slot);
}

}  // namespace

std::string_view to_string(TopBoundary bc) noexcept { return bc == TopBoundary::sealed ? "sealed" : "open"; }

TopBoundary parse_top_boundary(std::string_view text) {
    if (text == "sealed") return TopBoundary::sealed;
    if (text == "open") return TopBoundary::open;
    throw ParseError("unknown boundary tag '" + std::string(text) + "' (expected sealed or open)");
}

std::string_view to_string(Region r) noexcept {
    switch (r) {
        case Region::silicon: return "silicon";
        case Region::silica: return "silica";
        case Region::helium_slot: return "helium_slot";
        case Region::cladding: return "cladding";
    }
    return "?";
}

void SlotRingGeometry::validate() const {
    if (!(slot_width > 0.0)) throw DomainError("geometry: slot width must be positive");
    if (!(height > 0.0)) throw DomainError("geometry: slot height must be positive");
    if (!(rail_width > 0.0)) throw DomainError("geometry: rail width must be positive");
    if (!(outer_radius > 0.0)) throw DomainError("geometry: ring radius must be positive");
    if (!(slot_width < 2.0 * outer_radius)) throw DomainError("geometry: slot wider than the ring");
    if (!(slot_center_radius() > 0.0)) throw DomainError("geometry: rails and slot do not fit inside the ring");
}

void MeshSpec::validate() const {
    if (!(background_cell > 0.0)) throw DomainError("mesh: background_cell must be positive");
    if (slot_cells < 1) throw DomainError("mesh: slot_cells must be >= 1");
    if (!(grading > 1.0)) throw DomainError("mesh: grading ratio must exceed 1");
    if (!(max_cell >= background_cell)) throw DomainError("mesh: max_cell must be >= background_cell");
    if (!(padding_wavelengths > 0.0)) throw DomainError("mesh: padding must be positive");
    if (!(wavelength > 0.0)) throw DomainError("mesh: wavelength must be positive");
}

Mesh2D::Mesh2D(std::vector<double> x_edges, std::vector<double> y_edges, std::vector<Region> regions,
               std::vector<double> permittivity, Rect slot)
    : x_edges_(std::move(x_edges)),
      y_edges_(std::move(y_edges)),
      regions_(std::move(regions)),
      permittivity_(std::move(permittivity)),
      slot_(slot) {
    if (x_edges_.size() < 2 || y_edges_.size() < 2) throw DomainError("mesh: need at least one cell per axis");
    for (std::size_t i = 1; i < x_edges_.size(); ++i) {
        if (!(x_edges_[i] > x_edges_[i - 1])) throw DomainError("mesh: x edges must be strictly increasing");
    }
    for (std::size_t j = 1; j < y_edges_.size(); ++j) {
        if (!(y_edges_[j] > y_edges_[j - 1])) throw DomainError("mesh: y edges must be strictly increasing");
    }
    if (regions_.size() != cell_count() || permittivity_.size() != cell_count()) {
        throw DomainError("mesh: per-cell arrays do not match the grid");
    }
}

double Mesh2D::total_area() const noexcept {
    double sum = 0.0;
    for (std::size_t j = 0; j < ny(); ++j) {
        for (std::size_t i = 0; i < nx(); ++i) sum += cell_area(i, j);
    }
    return sum;
}

double Mesh2D::region_area(Region r) const noexcept {
    double sum = 0.0;
    for (std::size_t j = 0; j < ny(); ++j) {
        for (std::size_t i = 0; i < nx(); ++i) {
            if (region(i, j) == r) sum += cell_area(i, j);
        }
    }
    return sum;
}

double Mesh2D::max_grading_ratio() const noexcept {
    double worst = 1.0;
    auto scan = [&](const std::vector<double>& e) {
        for (std::size_t i = 2; i < e.size(); ++i) {
            const double a = e[i - 1] - e[i - 2];
            const double b = e[i] - e[i - 1];
            worst = std::max(worst, std::max(a / b, b / a));
        }
    };
    scan(x_edges_);
    scan(y_edges_);
    return worst;
}

double Mesh2D::max_boundary_index() const noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < nx(); ++i) {
        worst = std::max({worst, permittivity(i, 0), permittivity(i, ny() - 1)});
    }
    for (std::size_t j = 0; j < ny(); ++j) {
        worst = std::max({worst, permittivity(0, j), permittivity(nx() - 1, j)});
    }
    return std::sqrt(worst);
}

double Mesh2D::max_index() const noexcept {
    return std::sqrt(*std::max_element(permittivity_.begin(), permittivity_.end()));
}

std::vector<double> graded_axis(const std::vector<double>& breaks, const std::vector<double>& targets,
                                double grading) {
    if (breaks.size() < 2 || targets.size() != breaks.size() - 1) {
        throw DomainError("graded_axis: need n+1 breakpoints for n targets");
    }
    // Size field h(x) = min_k (t_k + g * dist(x, I_k)) has Lipschitz constant g,
    // so neighbouring cells of size ~h differ by at most (1 + g). Part of the
    // allowed ratio is held back to absorb per-interval rounding.
    const double slope = 0.75 * (grading - 1.0);
    auto size_at = [&](double x) {
        double h = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < targets.size(); ++k) {
            h = std::min(h, targets[k] + slope * distance_to_interval(x, breaks[k], breaks[k + 1]));
        }
        return h;
    };

    std::vector<double> nodes{breaks.front()};
    std::vector<double> cumulative(kQuadratureSamples + 1);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double a = breaks[k];
        const double b = breaks[k + 1];
        if (!(b > a)) throw DomainError("graded_axis: breakpoints must be strictly increasing");
        if (!(targets[k] > 0.0)) throw DomainError("graded_axis: target sizes must be positive");
        const double step = (b - a) / kQuadratureSamples;
        cumulative[0] = 0.0;
        double prev = 1.0 / size_at(a);
        for (int s = 1; s <= kQuadratureSamples; ++s) {
            const double cur = 1.0 / size_at(a + s * step);
            cumulative[s] = cumulative[s - 1] + 0.5 * (prev + cur) * step;
            prev = cur;
        }
        const double total = cumulative.back();
        const auto cells = static_cast<int>(std::max(1.0, std::ceil(total - 1e-9)));
        for (int c = 1; c < cells; ++c) {
            const double want = total * c / cells;
            const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), want);
            const auto s = static_cast<std::size_t>(std::distance(cumulative.begin(), it));
            const double c0 = cumulative[s - 1];
            const double c1 = cumulative[s];
            nodes.push_back(a + (static_cast<double>(s - 1) + (want - c0) / (c1 - c0)) * step);
        }
        nodes.push_back(b);
    }
    return nodes;
}

Mesh2D build_block_mesh(const Rect& domain, Region background_region, double background_permittivity,
                        const std::vector<Block>& blocks, const MeshSpec& spec, Rect slot) {
    spec.validate();
    auto axis = [&](bool along_x) {
        std::vector<double> breaks{along_x ? domain.x0 : domain.y0, along_x ? domain.x1 : domain.y1};
        for (const auto& b : blocks) {
            for (double v : along_x ? std::array{b.rect.x0, b.rect.x1} : std::array{b.rect.y0, b.rect.y1}) {
                if (v > breaks[0] && v < breaks[1]) breaks.push_back(v);
            }
        }
        breaks = unique_sorted(std::move(breaks));
        std::vector<double> targets;
        for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
            const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
            double t = spec.max_cell;
            for (const auto& b : blocks) {
                const double lo = along_x ? b.rect.x0 : b.rect.y0;
                const double hi = along_x ? b.rect.x1 : b.rect.y1;
                const double want = along_x ? b.target_dx : b.target_dy;
                if (mid > lo && mid < hi && want > 0.0) t = std::min(t, want);
            }
            targets.push_back(t);
        }
        return graded_axis(breaks, targets, spec.grading);
    };
    return paint(axis(true), axis(false), background_region, background_permittivity, blocks, spec, slot, 0.0);
}

Mesh2D build_mesh(const SlotRingGeometry& geometry, const MeshSpec& spec) {
    geometry.validate();
    spec.validate();
    const double w = geometry.slot_width;
    const double h = geometry.height;
    const double wr = geometry.rail_width;
    const double pad = spec.padding_wavelengths * spec.wavelength;
    const double slot_dx = w / spec.slot_cells;
    const double core_dx = std::max(spec.background_cell, slot_dx);

    // Build x >= 0 and mirror so the mesh is exactly symmetric about the slot centre.
    const double half_extent = 0.5 * w + wr + pad;
    const auto half = graded_axis({0.0, 0.5 * w, 0.5 * w + wr, half_extent},
                                  {slot_dx, core_dx, spec.max_cell}, spec.grading);
    std::vector<double> xs;
    xs.reserve(2 * half.size() - 1);
    for (auto it = half.rbegin(); it != half.rend(); ++it) xs.push_back(-*it);
    xs.back() = 0.0;
    xs.insert(xs.end(), half.begin() + 1, half.end());

    const auto ys = graded_axis({-pad, 0.0, h, h + pad}, {spec.max_cell, spec.background_cell, spec.max_cell},
                                spec.grading);

    if ((xs.size() - 1) * (ys.size() - 1) > spec.cell_budget) {
        std::ostringstream msg;
        msg << "mesh needs " << (xs.size() - 1) * (ys.size() - 1) << " cells, budget is " << spec.cell_budget
            << "; try background_cell > " << spec.background_cell << " or max_cell > " << spec.max_cell;
        throw ResourceError(msg.str());
    }

    const Rect slot{-0.5 * w, 0.5 * w, 0.0, h};
    const std::vector<Block> blocks{
        {slot, Region::helium_slot, geometry.slot_fill.permittivity},
        {{-0.5 * w - wr, -0.5 * w, 0.0, h}, Region::silicon, geometry.rail.permittivity},
        {{0.5 * w, 0.5 * w + wr, 0.0, h}, Region::silicon, geometry.rail.permittivity},
        {{-half_extent, half_extent, -pad, 0.0}, Region::silica, geometry.substrate.permittivity},
    };
    const double conformal_radius = spec.conformal ? geometry.slot_center_radius() : 0.0;
    return paint(std::move(xs), ys, Region::cladding, geometry.cladding.permittivity, blocks, spec, slot,
                 conformal_radius);
}

void write_mesh_debug(std::ostream& out, const Mesh2D& mesh) {
    out << "# slotbrillouin mesh v1\n";
    out << "x_edges " << mesh.x_edges().size();
    for (double x : mesh.x_edges()) out << ' ' << detail::format_exact(x);
    out << "\ny_edges " << mesh.y_edges().size();
    for (double y : mesh.y_edges()) out << ' ' << detail::format_exact(y);
    out << "\n# tags per row, j = 0 first: S=silicon O=silica H=helium_slot .=cladding\n";
    for (std::size_t j = 0; j < mesh.ny(); ++j) {
        std::string row(mesh.nx(), '.');
        for (std::size_t i = 0; i < mesh.nx(); ++i) {
            switch (mesh.region(i, j)) {
                case Region::silicon: row[i] = 'S'; break;
                case Region::silica: row[i] = 'O'; break;
                case Region::helium_slot: row[i] = 'H'; break;
                case Region::cladding: row[i] = '.'; break;
            }
        }
        out << row << '\n';
    }
}

}  // namespace slotbrillouin
