#include "slotbrillouin/metrics.hpp"

#include <cmath>
#include <limits>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/constants.hpp"
#include "slotbrillouin/errors.hpp"

namespace slotbrillouin {

double cooperativity(double g0, double kappa, double gamma) {
    if (!(kappa > 0.0) || !(gamma > 0.0)) throw DomainError("cooperativity: kappa and Gamma must be positive");
    return 4.0 * g0 * g0 / (kappa * gamma);
}

double intracavity_photons(double power, double omega, double kappa, double kappa_ext, double detuning) {
    if (!(kappa > 0.0) || !(kappa_ext > 0.0) || kappa_ext > kappa) {
        throw DomainError("intracavity_photons: need 0 < kappa_ext <= kappa");
    }
    const double lorentz = 0.25 * kappa * kappa + detuning * detuning;
    return power * kappa_ext / (PhysicalConstants::hbar * omega * lorentz);
}

double lasing_threshold(const ThresholdInputs& in) {
    const double kappa_ext = in.kappa_ext > 0.0 ? in.kappa_ext : 0.5 * in.kappa;
    if (!(in.kappa > 0.0) || kappa_ext > in.kappa) throw DomainError("lasing_threshold: need 0 < kappa_ext <= kappa");
    if (!(in.omega > 0.0)) throw DomainError("lasing_threshold: optical frequency must be positive");
    const double c0 = cooperativity(in.g0, in.kappa, in.gamma);
    if (!(c0 > 0.0)) throw DomainError("lasing_threshold: threshold undefined for zero cooperativity");
    const double lorentz = 0.25 * in.kappa * in.kappa + in.detuning * in.detuning;
    return PhysicalConstants::hbar * in.omega * lorentz / (kappa_ext * c0);
}

double thermal_occupancy(double omega, double temperature) {
    if (temperature < 0.0) throw DomainError("thermal_occupancy: temperature must be >= 0");
    if (!(omega > 0.0)) throw DomainError("thermal_occupancy: frequency must be positive");
    if (temperature == 0.0) return 0.0;
    const double x = PhysicalConstants::hbar * omega / (PhysicalConstants::k_B * temperature);
    return 1.0 / std::expm1(x);
}

CoherenceResult coherence_check(double c0, double photons, double occupancy) {
    if (c0 < 0.0 || photons < 0.0 || occupancy < 0.0) throw DomainError("coherence_check: inputs must be >= 0");
    const double drive = c0 * photons;
    CoherenceResult r;
    r.satisfied = drive > occupancy;
    r.margin = occupancy > 0.0 ? drive / occupancy
                               : (drive > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    return r;
}

bool sideband_resolved(double omega, double kappa) {
    if (!(omega > 0.0) || !(kappa > 0.0)) throw DomainError("sideband_resolved: inputs must be positive");
    return omega > kappa;
}

void complete_metrics(DesignReport& r, double optical_omega) {
    r.gamma = acoustic_linewidth(r.omega_b, r.q_acoustic);
    r.c0 = cooperativity(r.g0, r.kappa, r.gamma);
    r.threshold_power = r.c0 > 0.0 ? lasing_threshold({r.g0, r.kappa, 0.0, r.gamma, optical_omega, 0.0})
                                   : std::numeric_limits<double>::infinity();
    r.occupancy = thermal_occupancy(r.omega_b, r.temperature);
    r.resolved_sideband = sideband_resolved(r.omega_b, r.kappa);
    r.coherence_photons = r.c0 > 0.0 ? r.occupancy / r.c0 : std::numeric_limits<double>::infinity();
}

}  // namespace slotbrillouin
