#pragma once

#include <numbers>

namespace slotbrillouin {

// CODATA 2018 exact / recommended values, SI units.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;       // J s
    static constexpr double k_B = 1.380649e-23;           // J/K
    static constexpr double c0 = 299792458.0;            // m/s
    static constexpr double epsilon0 = 8.8541878128e-12;  // F/m
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angular frequency (rad/s) <-> ordinary frequency (Hz).
constexpr double to_hz(double angular) noexcept { return angular / kTwoPi; }
constexpr double to_angular(double hz) noexcept { return hz * kTwoPi; }

constexpr double angular_frequency_from_wavelength(double wavelength) noexcept {
    return kTwoPi * PhysicalConstants::c0 / wavelength;
}

inline constexpr double kDefaultWavelength = 1550e-9;

}  // namespace slotbrillouin
