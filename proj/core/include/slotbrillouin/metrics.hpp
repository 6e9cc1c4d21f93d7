#pragma once

#include <string>

#include "slotbrillouin/mesh.hpp"

namespace slotbrillouin {

/// C0 = 4 g0^2 / (kappa Gamma). Rates in rad/s.
double cooperativity(double g0, double kappa, double gamma);

struct ThresholdInputs {
    double g0 = 0.0;
    double kappa = 0.0;
    double kappa_ext = 0.0;  // <= 0 selects critical coupling, kappa / 2
    double gamma = 0.0;
    double omega = 0.0;      // optical angular frequency
    double detuning = 0.0;
};

/// Pump power at which Brillouin gain balances acoustic loss:
/// n_th = 1 / C0 intracavity photons, fed through
/// n_p = P kappa_ext / (hbar omega ((kappa/2)^2 + detuning^2)).
double lasing_threshold(const ThresholdInputs& in);

/// Intracavity photon number sustained by input power P (same convention).
double intracavity_photons(double power, double omega, double kappa, double kappa_ext, double detuning = 0.0);

/// Bose occupancy 1 / (exp(hbar Omega / k_B T) - 1); zero at T = 0.
double thermal_occupancy(double omega, double temperature);

struct CoherenceResult {
    bool satisfied = false;  // C0 n_p > n_m
    double margin = 0.0;     // C0 n_p / n_m (infinite when n_m = 0)
};

CoherenceResult coherence_check(double c0, double photons, double occupancy);

/// Omega > kappa, strictly.
bool sideband_resolved(double omega, double kappa);

// One evaluated design point; the sweep writes one CSV row per report.
struct DesignReport {
    SlotRingGeometry geometry;
    TopBoundary boundary = TopBoundary::sealed;
    double n_eff = 0.0;
    double eta_slot = 0.0;
    long optical_order = 0;
    long acoustic_order = 0;
    double omega_b = 0.0;  // rad/s
    double g0 = 0.0;       // rad/s
    double kappa = 0.0;    // rad/s
    double q_acoustic = 0.0;
    double gamma = 0.0;    // rad/s
    double c0 = 0.0;
    double threshold_power = 0.0;  // W
    double temperature = 0.0;
    double occupancy = 0.0;
    bool resolved_sideband = false;
    double coherence_photons = 0.0;  // n_m / C0
    double zero_point_pressure = 0.0;  // Pa
    double strain_energy_error = 0.0;  // |int 1/2 K eps^2 dV / (hbar Omega / 2) - 1|
    double g0_uniform_estimate = 0.0;  // rad/s, uniform-strain oracle
    std::string status = "ok";

    [[nodiscard]] bool ok() const noexcept { return status == "ok"; }
};

/// Fills the derived metric fields (Gamma, C0, P_th, n_m, sideband flag,
/// coherence photon number) from g0, Omega_B, kappa, Q and T.
void complete_metrics(DesignReport& report, double optical_omega);

}  // namespace slotbrillouin
