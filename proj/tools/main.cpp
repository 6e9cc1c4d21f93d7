#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/capillary.hpp"
#include "slotbrillouin/config.hpp"
#include "slotbrillouin/coupling.hpp"
#include "slotbrillouin/errors.hpp"
#include "slotbrillouin/field_io.hpp"
#include "slotbrillouin/metrics.hpp"
#include "slotbrillouin/report_io.hpp"
#include "slotbrillouin/sweep.hpp"

namespace sb = slotbrillouin;

namespace {

enum Exit : int { kOk = 0, kAllFailed = 1, kConfigError = 2, kIoError = 3 };

struct Common {
    std::string config;
    std::string out_csv;
    std::string out_svg;
    std::optional<std::size_t> workers;
    bool verbose = false;
};

sb::SweepConfig load(const Common& c) {
    sb::SweepConfig cfg = c.config.empty() ? sb::validate_config("") : sb::load_config(c.config);
    sb::apply_environment(cfg);
    if (!c.out_csv.empty()) cfg.out_csv = c.out_csv;
    if (!c.out_svg.empty()) cfg.out_svg = c.out_svg;
    if (c.workers) cfg.workers = *c.workers;
    for (const auto& w : sb::config_warnings(cfg)) std::cerr << "warning: " << w << '\n';
    if (c.verbose) std::cerr << "effective configuration:\n" << sb::config_to_json(cfg) << '\n';
    return cfg;
}

sb::LogFn logger(const Common& c) {
    if (!c.verbose) return {};
    return [](const std::string& line) { std::cerr << line << '\n'; };
}

void print(const char* label, double value, const char* unit = "") {
    std::printf("%-22s %.9e %s\n", label, value, unit);
}

int write_reports(const sb::SweepConfig& cfg, const std::vector<sb::DesignReport>& reports) {
    if (cfg.out_csv.empty()) {
        sb::write_csv(std::cout, reports);
    } else {
        sb::emit_csv(reports, cfg.out_csv);
    }
    if (!cfg.out_svg.empty() && !sb::emit_svg(reports, cfg.out_svg)) {
        std::cerr << "warning: fewer than two successful widths, SVG not written\n";
    }
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.ok() ? 0 : 1;
    if (failed > 0) std::cerr << failed << " of " << reports.size() << " rows failed\n";
    return failed == reports.size() ? kAllFailed : kOk;
}

int cmd_optical(const Common& c, const std::string& dump_mode, const std::string& dump_mesh) {
    const auto cfg = load(c);
    const auto sol = sb::solve_slot_mode(cfg.geometry, cfg);
    const auto order = sb::resonance_order(sol.mode.n_eff, cfg.geometry.slot_center_radius(), cfg.wavelength);
    print("slot_width_m", cfg.geometry.slot_width, "m");
    print("n_eff", sol.mode.n_eff);
    print("eta_slot", sol.mode.slot_fraction);
    std::printf("%-22s %s\n", "polarization", std::string(sb::to_string(sol.mode.polarization)).c_str());
    std::printf("%-22s %ld (exact %.6f)\n", "m_opt", order.nearest, order.exact);
    print("residual", sol.mode.residual);
    std::printf("%-22s %zu x %zu\n", "mesh_cells", sol.mesh.nx(), sol.mesh.ny());
    if (!dump_mode.empty()) sb::save_optical_mode(dump_mode, sol.mode);
    if (!dump_mesh.empty()) sb::save_mesh(dump_mesh, sol.mesh);
    return kOk;
}

int cmd_acoustic(const Common& c, std::optional<long> order, const std::string& bc_text, const std::string& dump) {
    const auto cfg = load(c);
    const auto bc = bc_text.empty() ? cfg.geometry.top : sb::parse_top_boundary(bc_text);
    long m = 0;
    if (order) {
        m = *order;
    } else {
        const auto sol = sb::solve_slot_mode(cfg.geometry, cfg);
        m = sb::phase_match(sb::resonance_order(sol.mode.n_eff, cfg.geometry.slot_center_radius(), cfg.wavelength)
                                .nearest)
                .acoustic_order;
    }
    auto mode = sb::solve_acoustic_mode(cfg.geometry, cfg.geometry.slot_fill, m, bc, cfg.acoustic_mesh);
    std::printf("%-22s %ld\n", "m_ac", m);
    std::printf("%-22s %s\n", "boundary", std::string(sb::to_string(bc)).c_str());
    print("omega_Hz", sb::to_hz(mode.omega), "Hz");
    if (mode.propagating) {
        const double p = sb::zero_point_normalize(mode, cfg.geometry.slot_fill.acoustics().bulk_modulus);
        print("p_zp", p, "Pa");
        print("strain_energy_J", sb::strain_energy(mode), "J");
    } else {
        std::printf("%-22s %s\n", "propagating", "no (zero-frequency mode)");
    }
    if (!dump.empty()) sb::save_acoustic_mode(dump, mode);
    return kOk;
}

int cmd_couple(const Common& c) {
    const auto cfg = load(c);
    const auto rows = sb::evaluate_width(cfg, cfg.geometry.slot_width, logger(c));
    for (const auto& r : rows) {
        if (r.q_acoustic != cfg.acoustic_q.front()) continue;
        std::printf("[%s]\n", std::string(sb::to_string(r.boundary)).c_str());
        if (!r.ok()) {
            std::printf("  %s\n", r.status.c_str());
            continue;
        }
        print("  omega_B_Hz", sb::to_hz(r.omega_b), "Hz");
        print("  p_zp", r.zero_point_pressure, "Pa");
        print("  g0_Hz", sb::to_hz(r.g0), "Hz");
        print("  g0_uniform_Hz", sb::to_hz(r.g0_uniform_estimate), "Hz");
    }
    if (!cfg.out_csv.empty()) sb::emit_csv(rows, cfg.out_csv);
    for (const auto& r : rows) {
        if (r.ok()) return kOk;
    }
    return kAllFailed;
}

struct MetricArgs {
    double g0_hz = 250e3;
    double kappa_hz = 1e9;
    double omega_hz = 400e6;
    double q = 1e5;
    double temperature = 20e-3;
    double detuning_hz = 0.0;
    double photons = 1.0;
};

int cmd_metrics(const MetricArgs& a, double wavelength) {
    const double g0 = sb::to_angular(a.g0_hz);
    const double kappa = sb::to_angular(a.kappa_hz);
    const double big_omega = sb::to_angular(a.omega_hz);
    const double gamma = sb::acoustic_linewidth(big_omega, a.q);
    const double c0 = sb::cooperativity(g0, kappa, gamma);
    const double omega = sb::angular_frequency_from_wavelength(wavelength);
    const double n_m = sb::thermal_occupancy(big_omega, a.temperature);
    const auto coh = sb::coherence_check(c0, a.photons, n_m);
    print("Gamma_Hz", sb::to_hz(gamma), "Hz");
    print("C0", c0);
    if (c0 > 0.0) {
        print("P_th_W", sb::lasing_threshold({g0, kappa, 0.0, gamma, omega, sb::to_angular(a.detuning_hz)}), "W");
    }
    print("n_m", n_m);
    std::printf("%-22s %s\n", "sideband_resolved", sb::sideband_resolved(big_omega, kappa) ? "true" : "false");
    std::printf("%-22s %s (margin %.6e)\n", "C0*n_p > n_m", coh.satisfied ? "true" : "false", coh.margin);
    return kOk;
}

int cmd_capillary(const Common& c, std::optional<double> film) {
    const auto cfg = load(c);
    const sb::CapillaryConfig cap = cfg.capillary.value_or(sb::CapillaryConfig{});
    sb::CapillaryModel model;
    model.vdw_coefficient = cap.vdw_coefficient;
    model.surface_tension = cap.surface_tension;
    model.slot_width = cfg.geometry.slot_width;
    model.height = cfg.geometry.height;
    model.film_thickness = film.value_or(cap.film_thickness);
    const auto t = sb::fill_transition_thickness(model);
    std::printf("%-22s %s\n", "status", std::string(sb::to_string(t.status)).c_str());
    if (t.status == sb::FillStatus::transition) print("d_crit_m", t.thickness, "m");
    try {
        const double de = sb::fill_energy_delta(model);
        print("film_thickness_m", model.film_thickness, "m");
        print("delta_E_J_per_m", de, "J/m");
        std::printf("%-22s %s\n", "filled", de < 0.0 ? "yes" : "no");
    } catch (const sb::ModelInvalidError& e) {
        std::printf("%-22s %s (%s)\n", "filled", "yes", e.what());
    }
    return kOk;
}

int cmd_sweep(const Common& c) {
    const auto cfg = load(c);
    const auto reports = sb::run_sweep(cfg, logger(c));
    return write_reports(cfg, reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slot-waveguide superfluid Brillouin design simulator"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--config", common.config, "JSON configuration file");
    app.add_option("--out-csv", common.out_csv, "CSV output path");
    app.add_option("--out-svg", common.out_svg, "SVG output path");
    app.add_option("--workers", common.workers, "Concurrent sweep points (0 = all cores)");
    app.add_flag("--verbose", common.verbose, "Echo the configuration and per-point progress to stderr");

    std::string dump_mode;
    std::string dump_mesh;
    auto* optical = app.add_subcommand("optical-mode", "Solve the slot mode at the configured slot width");
    optical->add_option("--dump-mode", dump_mode, "Write the mode fields as text");
    optical->add_option("--dump-mesh", dump_mesh, "Write the mesh as text");

    std::optional<long> order;
    std::string bc;
    std::string dump_pressure;
    auto* acoustic = app.add_subcommand("acoustic-mode", "Solve the slot pressure mode");
    acoustic->add_option("--order", order, "Acoustic azimuthal order (default: 2 m_opt from the optical solve)");
    acoustic->add_option("--bc", bc, "Top boundary: sealed or open");
    acoustic->add_option("--dump", dump_pressure, "Write the pressure field as text");

    auto* couple = app.add_subcommand("couple", "Coupling rate at the configured slot width");

    MetricArgs margs;
    auto* metrics = app.add_subcommand("metrics", "Figures of merit from given rates");
    metrics->add_option("--g0-hz", margs.g0_hz, "g0/2pi (Hz)")->capture_default_str();
    metrics->add_option("--kappa-hz", margs.kappa_hz, "kappa/2pi (Hz)")->capture_default_str();
    metrics->add_option("--omega-hz", margs.omega_hz, "Omega/2pi (Hz)")->capture_default_str();
    metrics->add_option("--q", margs.q, "Acoustic quality factor")->capture_default_str();
    metrics->add_option("--temperature", margs.temperature, "Bath temperature (K)")->capture_default_str();
    metrics->add_option("--detuning-hz", margs.detuning_hz, "Pump detuning/2pi (Hz)")->capture_default_str();
    metrics->add_option("--photons", margs.photons, "Intracavity photons n_p")->capture_default_str();

    std::optional<double> film;
    auto* capillary = app.add_subcommand("capillary", "Film thickness at which the slot fills");
    capillary->add_option("--film-thickness", film, "Film thickness to evaluate (m)");

    auto* sweep = app.add_subcommand("sweep", "Sweep slot widths and boundary conditions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (optical->parsed()) return cmd_optical(common, dump_mode, dump_mesh);
        if (acoustic->parsed()) return cmd_acoustic(common, order, bc, dump_pressure);
        if (couple->parsed()) return cmd_couple(common);
        if (metrics->parsed()) {
            const auto cfg = load(common);
            return cmd_metrics(margs, cfg.wavelength);
        }
        if (capillary->parsed()) return cmd_capillary(common, film);
        if (sweep->parsed()) return cmd_sweep(common);
    } catch (const sb::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    } catch (const sb::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const sb::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kAllFailed;
    }
    return kOk;
}
