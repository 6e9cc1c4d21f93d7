#include "slotbrillouin/coupling.hpp"

#include <cmath>

#include "slotbrillouin/constants.hpp"
#include "slotbrillouin/errors.hpp"

namespace slotbrillouin {

std::string_view to_string(ScatteringDirection d) noexcept {
    return d == ScatteringDirection::backward ? "backward" : "forward";
}

std::string_view to_string(ScatteringScheme s) noexcept {
    switch (s) {
        case ScatteringScheme::counter_modal: return "counter-modal";
        case ScatteringScheme::intra_modal: return "intra-modal";
        case ScatteringScheme::inter_modal: return "inter-modal";
    }
    return "unknown";
}

double brillouin_shift(double n_eff, double sound_speed, double wavelength) {
    if (!(n_eff > 0.0) || sound_speed < 0.0 || !(wavelength > 0.0)) {
        throw DomainError("brillouin_shift: n_eff and wavelength must be positive, sound speed non-negative");
    }
    return kTwoPi * 2.0 * sound_speed * n_eff / wavelength;
}

PhaseMatchRecord phase_match(long optical_order, ScatteringDirection direction) {
    if (optical_order < 1) throw DomainError("phase_match: optical order must be >= 1");
    if (direction == ScatteringDirection::forward) {
        throw UnsupportedError("phase_match: forward Brillouin scattering is not supported");
    }
    PhaseMatchRecord r;
    r.optical_order = optical_order;
    r.acoustic_order = 2 * optical_order;
    r.direction = direction;
    r.scheme = ScatteringScheme::counter_modal;
    return r;
}

PhaseMatchRecord phase_match(long optical_order, double pump_omega, double shift, double kappa) {
    PhaseMatchRecord r = phase_match(optical_order);
    if (!(pump_omega > 0.0) || !(shift >= 0.0) || shift >= pump_omega) {
        throw DomainError("phase_match: need 0 <= shift < pump frequency");
    }
    if (kappa > 0.0 && !(shift < kappa)) {
        throw DomainError("phase_match: counter-modal scattering needs the shift below the optical linewidth");
    }
    r.pump_omega = pump_omega;
    r.shift = shift;
    r.stokes_omega = pump_omega - shift;
    return r;
}

CouplingResult coupling_rate(const OpticalMode& optical, const AcousticMode& acoustic, const Mesh2D& mesh,
                             double slot_permittivity) {
    if (optical.nx != mesh.nx() || optical.ny != mesh.ny()) {
        throw DomainError("coupling_rate: optical mode does not belong to this mesh");
    }
    if (!acoustic.normalized()) throw StateError("coupling_rate: acoustic mode is not zero-point normalized");
    const Rect& s = mesh.slot();
    const double tol = 1e-6 * s.width();
    if (std::abs(s.x0 - acoustic.slot.x0) > tol || std::abs(s.x1 - acoustic.slot.x1) > tol ||
        std::abs(s.y0 - acoustic.slot.y0) > 1e-6 * s.height() ||
        std::abs(s.y1 - acoustic.slot.y1) > 1e-6 * s.height()) {
        throw DomainError("coupling_rate: acoustic slot does not match the mesh slot");
    }

    constexpr int sub = 8;  // strain quadrature points per direction in each cell
    const auto intensity = optical.cell_intensity();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < mesh.ny(); ++j) {
        for (std::size_t i = 0; i < mesh.nx(); ++i) {
            const double e2 = intensity[mesh.cell_index(i, j)];
            const double area = mesh.cell_area(i, j);
            den += mesh.permittivity(i, j) * e2 * area;
            if (mesh.region(i, j) != Region::helium_slot) continue;
            double strain = 0.0;
            for (int b = 0; b < sub; ++b) {
                const double y = mesh.y_edges()[j] + (b + 0.5) / sub * mesh.dy(j);
                for (int a = 0; a < sub; ++a) {
                    const double x = mesh.x_edges()[i] + (a + 0.5) / sub * mesh.dx(i);
                    strain += acoustic.strain_at(x, y);
                }
            }
            num += strain / (sub * sub) * e2 * area;
        }
    }
    if (!(den > 0.0)) throw DomainError("coupling_rate: optical mode has no energy");

    CouplingResult r;
    r.numerator = num;
    r.denominator = den;
    r.g0 = std::abs(0.5 * optical.omega * (slot_permittivity - 1.0) * num / den);
    r.slot_width = s.width();
    r.height = s.height();
    r.boundary = acoustic.boundary;
    return r;
}

double uniform_field_oracle(double eta_slot, double zero_point_pressure, double bulk_modulus, double omega,
                            double slot_permittivity) {
    if (eta_slot < 0.0 || eta_slot > 1.0) throw DomainError("uniform_field_oracle: eta_slot must lie in [0, 1]");
    if (!(bulk_modulus > 0.0)) throw DomainError("uniform_field_oracle: bulk modulus must be positive");
    return 0.5 * omega * (slot_permittivity - 1.0) * (zero_point_pressure / bulk_modulus) * eta_slot;
}

}  // namespace slotbrillouin
