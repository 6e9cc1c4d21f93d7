#pragma once

#include <cstdint>
#include <string_view>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/mesh.hpp"
#include "slotbrillouin/optical.hpp"

namespace slotbrillouin {

enum class ScatteringDirection : std::uint8_t { backward, forward };
enum class ScatteringScheme : std::uint8_t { counter_modal, intra_modal, inter_modal };

std::string_view to_string(ScatteringDirection d) noexcept;
std::string_view to_string(ScatteringScheme s) noexcept;

struct PhaseMatchRecord {
    double pump_omega = 0.0;    // rad/s
    double stokes_omega = 0.0;  // rad/s, pump - shift
    double shift = 0.0;         // Omega_B, rad/s
    long optical_order = 0;
    long acoustic_order = 0;
    ScatteringDirection direction = ScatteringDirection::backward;
    ScatteringScheme scheme = ScatteringScheme::counter_modal;
};

/// Omega_B = 2 pi * 2 c n_eff / lambda (rad/s).
double brillouin_shift(double n_eff, double sound_speed, double wavelength);

/// Backward scattering between counter-propagating modes of order m_opt needs
/// an acoustic order 2 m_opt. Forward scattering is not modelled and throws
/// UnsupportedError.
PhaseMatchRecord phase_match(long optical_order, ScatteringDirection direction = ScatteringDirection::backward);

/// Same record with frequencies filled in. Counter-modal operation needs the
/// shift to sit inside the optical linewidth; when kappa > 0 is given and
/// shift >= kappa this throws DomainError.
PhaseMatchRecord phase_match(long optical_order, double pump_omega, double shift, double kappa = 0.0);

struct CouplingResult {
    double g0 = 0.0;          // rad/s, magnitude
    double numerator = 0.0;   // int_slot eps_v |E|^2 dA
    double denominator = 0.0; // int_all eps_r |E|^2 dA
    double slot_width = 0.0;
    double height = 0.0;
    TopBoundary boundary = TopBoundary::sealed;
};

/// Electrostrictive single-photon coupling
///   g0 = (omega / 2) (eps_sf - 1) int_slot eps_v |E|^2 dA / int eps_r |E|^2 dA.
/// The acoustic mode must be zero-point normalized (StateError otherwise) and
/// its slot must coincide with the mesh slot (DomainError otherwise).
CouplingResult coupling_rate(const OpticalMode& optical, const AcousticMode& acoustic, const Mesh2D& mesh,
                             double slot_permittivity);

/// Uniform-strain estimate (omega / 2) (eps_sf - 1) (p_zp / K) eta_slot.
double uniform_field_oracle(double eta_slot, double zero_point_pressure, double bulk_modulus, double omega,
                            double slot_permittivity);

}  // namespace slotbrillouin
