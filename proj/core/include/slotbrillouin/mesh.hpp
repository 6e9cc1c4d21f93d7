#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "slotbrillouin/constants.hpp"
#include "slotbrillouin/materials.hpp"

namespace slotbrillouin {

enum class TopBoundary : std::uint8_t { sealed, open };

std::string_view to_string(TopBoundary bc) noexcept;
TopBoundary parse_top_boundary(std::string_view text);

// Cross-section of a slot ring: two silicon rails of height `height` on a
// substrate, separated by a fluid-filled slot. Coordinates used throughout:
// x is radial with the slot centred at x = 0 (outward positive), y = 0 is the
// substrate top and the slot occupies 0 <= y <= height.
struct SlotRingGeometry {
    double outer_radius = 10e-6;  // outer edge of the outer rail
    double slot_width = 50e-9;
    double height = 220e-9;
    double rail_width = 240e-9;   // per rail
    Material rail = builtin_material("silicon");
    Material substrate = builtin_material("silica");
    Material cladding = builtin_material("vacuum");
    Material slot_fill = builtin_material("helium");
    TopBoundary top = TopBoundary::sealed;

    // Radius of the slot centreline; the reference radius for azimuthal orders.
    [[nodiscard]] double slot_center_radius() const noexcept {
        return outer_radius - rail_width - 0.5 * slot_width;
    }
    // Throws DomainError on non-positive lengths or a ring too small for the
    // cross-section.
    void validate() const;
};

struct MeshSpec {
    double background_cell = 10e-9;  // target cell size inside rails and slot height
    int slot_cells = 10;             // minimum number of cells across the slot width
    double grading = 1.2;            // max ratio between adjacent cell sizes
    double max_cell = 100e-9;        // cap on cell size in the padding
    double padding_wavelengths = 1.5;
    double wavelength = kDefaultWavelength;
    std::size_t cell_budget = 400000;
    bool conformal = false;          // multiply the index by exp(x/R_ref)

    void validate() const;
};

enum class Region : std::uint8_t { silicon, silica, helium_slot, cladding };

std::string_view to_string(Region r) noexcept;

struct Rect {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;

    [[nodiscard]] double width() const noexcept { return x1 - x0; }
    [[nodiscard]] double height() const noexcept { return y1 - y0; }
    [[nodiscard]] bool contains(double x, double y) const noexcept {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }
};

// A rectangle of uniform material used to paint a mesh. Target sizes control
// the local resolution of the generated axes.
struct Block {
    Rect rect;
    Region region = Region::cladding;
    double permittivity = 1.0;
    double target_dx = 0.0;  // 0 = use MeshSpec::max_cell
    double target_dy = 0.0;
};

// Structured, nonuniform rectilinear grid. Cell (i, j) spans
// [x_edges[i], x_edges[i+1]] x [y_edges[j], y_edges[j+1]] and has uniform
// material. Immutable after construction.
class Mesh2D {
public:
    Mesh2D(std::vector<double> x_edges, std::vector<double> y_edges, std::vector<Region> regions,
           std::vector<double> permittivity, Rect slot);

    [[nodiscard]] std::size_t nx() const noexcept { return x_edges_.size() - 1; }
    [[nodiscard]] std::size_t ny() const noexcept { return y_edges_.size() - 1; }
    [[nodiscard]] std::size_t cell_count() const noexcept { return nx() * ny(); }
    [[nodiscard]] std::size_t cell_index(std::size_t i, std::size_t j) const noexcept { return j * nx() + i; }

    [[nodiscard]] const std::vector<double>& x_edges() const noexcept { return x_edges_; }
    [[nodiscard]] const std::vector<double>& y_edges() const noexcept { return y_edges_; }
    [[nodiscard]] double dx(std::size_t i) const noexcept { return x_edges_[i + 1] - x_edges_[i]; }
    [[nodiscard]] double dy(std::size_t j) const noexcept { return y_edges_[j + 1] - y_edges_[j]; }
    [[nodiscard]] double x_center(std::size_t i) const noexcept { return 0.5 * (x_edges_[i] + x_edges_[i + 1]); }
    [[nodiscard]] double y_center(std::size_t j) const noexcept { return 0.5 * (y_edges_[j] + y_edges_[j + 1]); }
    [[nodiscard]] double cell_area(std::size_t i, std::size_t j) const noexcept { return dx(i) * dy(j); }

    [[nodiscard]] Region region(std::size_t i, std::size_t j) const noexcept { return regions_[cell_index(i, j)]; }
    [[nodiscard]] double permittivity(std::size_t i, std::size_t j) const noexcept {
        return permittivity_[cell_index(i, j)];
    }
    [[nodiscard]] const std::vector<Region>& regions() const noexcept { return regions_; }
    [[nodiscard]] const std::vector<double>& permittivity() const noexcept { return permittivity_; }

    // Slot rectangle (fluid region); empty rect for meshes without a slot.
    [[nodiscard]] const Rect& slot() const noexcept { return slot_; }
    [[nodiscard]] Rect domain() const noexcept {
        return {x_edges_.front(), x_edges_.back(), y_edges_.front(), y_edges_.back()};
    }

    [[nodiscard]] double total_area() const noexcept;
    [[nodiscard]] double region_area(Region r) const noexcept;
    [[nodiscard]] double max_grading_ratio() const noexcept;
    // Largest refractive index among cells touching the outer boundary.
    [[nodiscard]] double max_boundary_index() const noexcept;
    [[nodiscard]] double max_index() const noexcept;

private:
    std::vector<double> x_edges_;
    std::vector<double> y_edges_;
    std::vector<Region> regions_;
    std::vector<double> permittivity_;
    Rect slot_;
};

/// Generates a graded axis on [lo, hi] whose nodes include every breakpoint.
/// `targets[k]` is the wanted cell size on [breaks[k], breaks[k+1]]; sizes
/// grow away from fine intervals at no more than `grading` per cell.
std::vector<double> graded_axis(const std::vector<double>& breaks, const std::vector<double>& targets,
                                double grading);

/// Paints blocks over a background into a mesh on `domain`. Each cell takes
/// the material of the block containing its centre (blocks must not overlap).
Mesh2D build_block_mesh(const Rect& domain, Region background_region, double background_permittivity,
                        const std::vector<Block>& blocks, const MeshSpec& spec, Rect slot = {});

/// Mesh of the slot-ring cross-section, mirror-symmetric about x = 0, with at
/// least spec.slot_cells cells across the slot and >= padding_wavelengths of
/// cladding/substrate around the rails.
Mesh2D build_mesh(const SlotRingGeometry& geometry, const MeshSpec& spec);

/// Plain-text debug dump: cell edges followed by one tag row per y-cell.
void write_mesh_debug(std::ostream& out, const Mesh2D& mesh);

}  // namespace slotbrillouin
