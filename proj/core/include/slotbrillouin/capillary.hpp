#pragma once

#include <cstdint>
#include <string_view>

namespace slotbrillouin {

// Defaults for a helium film on silicon at millikelvin temperatures.
struct HeliumFilmConstants {
    static constexpr double surface_tension = 3.75e-4;  // N/m, liquid 4He near T = 0
    // n C3: number density 2.18e28 m^-3 times C3 / k_B ~ 1500 K A^3 for He on Si.
    static constexpr double vdw_coefficient = 4.5e-22;  // J
};

// Energy balance for the slot filling transition. The slot cross-section is a
// w x h rectangle with walls left, right and bottom; the film of thickness d
// coats all three. Filling replaces the two lateral film surfaces (height
// h - d) with a single top surface of width w, and puts fluid at distance
// z > d from every wall, which costs alpha / z^3 per unit volume.
struct CapillaryModel {
    double vdw_coefficient = HeliumFilmConstants::vdw_coefficient;  // alpha, J
    double surface_tension = HeliumFilmConstants::surface_tension;  // sigma, N/m
    double slot_width = 50e-9;
    double height = 220e-9;
    double film_thickness = 2e-9;

    // Throws DomainError for non-positive inputs and ModelInvalidError when
    // d >= w/2 (the films already meet).
    void validate() const;
};

/// int over {z > d} of z^-3 dA for the three-walled w x h rectangle, where z
/// is the distance to the nearest wall. Closed form via the level sets of z.
double vdw_area_integral(double slot_width, double height, double film_thickness);

/// E_filled - E_unfilled per unit slot length (J/m); negative favours filling.
double fill_energy_delta(const CapillaryModel& model);

enum class FillStatus : std::uint8_t { transition, always_filled, never_filled };

std::string_view to_string(FillStatus s) noexcept;

struct FillTransition {
    FillStatus status = FillStatus::transition;
    double thickness = 0.0;  // d_crit when status == transition
    double residual = 0.0;   // fill_energy_delta at d_crit
};

/// Film thickness at which fill_energy_delta changes sign on (0, w/2).
/// `model.film_thickness` is ignored.
FillTransition fill_transition_thickness(const CapillaryModel& model);

}  // namespace slotbrillouin
