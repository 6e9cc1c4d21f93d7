#include "slotbrillouin/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/coupling.hpp"
#include "slotbrillouin/errors.hpp"
#include "slotbrillouin/materials.hpp"
#include "text_util.hpp"

namespace slotbrillouin {

std::optional<std::size_t> pick_slot_mode(const std::vector<OpticalMode>& modes) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const auto& m = modes[k];
        if (!m.guided || m.polarization != Polarization::te_like || ex_mirror_parity(m) <= 0.0) continue;
        if (!best || m.n_eff > modes[*best].n_eff) best = k;
    }
    return best;
}

OpticalSolution solve_slot_mode(const SlotRingGeometry& geometry, const SweepConfig& config) {
    MeshSpec spec = config.mesh;
    spec.wavelength = config.wavelength;
    Mesh2D mesh = build_mesh(geometry, spec);
    const auto op = assemble_operator(mesh, config.wavelength);
    // A shift far above a near-degenerate TE/TM pair converges slowly; on
    // failure move it halfway towards the cladding/substrate index and retry.
    std::vector<OpticalMode> modes;
    double guess = config.n_eff_guess;
    for (int attempt = 0;; ++attempt) {
        try {
            modes = solve_modes(op, guess, config.mode_count);
            break;
        } catch (const ConvergenceError&) {
            if (attempt == 3) throw;
            guess = 0.5 * (guess + mesh.max_boundary_index());
        }
    }
    const auto pick = pick_slot_mode(modes);
    if (!pick) {
        std::string found;
        for (const auto& m : modes) {
            found += (found.empty() ? "" : "; ") + std::string(to_string(m.polarization)) + " n_eff " +
                     detail::format_sci(m.n_eff, 5) + (m.guided ? "" : " unguided");
        }
        throw DomainError("no guided TE-like slot mode among " + std::to_string(modes.size()) + " solved (" +
                          found + ")");
    }
    return {std::move(mesh), std::move(modes[*pick])};
}

std::vector<DesignReport> evaluate_width(const SweepConfig& config, double width, const LogFn& log) {
    SlotRingGeometry geometry = config.geometry;
    geometry.slot_width = width;

    std::vector<DesignReport> rows;
    for (auto bc : config.boundaries) {
        for (double q : config.acoustic_q) {
            DesignReport r;
            r.geometry = geometry;
            r.geometry.top = bc;
            r.boundary = bc;
            r.kappa = config.kappa;
            r.q_acoustic = q;
            r.temperature = config.temperature;
            rows.push_back(r);
        }
    }
    auto fail_rows = [&](std::size_t first, std::size_t last, const std::string& what) {
        for (std::size_t k = first; k < last; ++k) rows[k].status = "error: " + what;
        if (log) log("width " + detail::format_sci(width, 4) + " m: " + what);
    };

    std::optional<OpticalSolution> optical;
    try {
        optical = solve_slot_mode(geometry, config);
    } catch (const std::exception& e) {
        fail_rows(0, rows.size(), e.what());
        return rows;
    }
    const OpticalMode& mode = optical->mode;
    const auto order = resonance_order(mode.n_eff, geometry.slot_center_radius(), config.wavelength);
    const PhaseMatchRecord match = phase_match(order.nearest);
    const auto& fluid = geometry.slot_fill;
    if (log) {
        log("width " + detail::format_sci(width, 4) + " m: n_eff " + detail::format_sci(mode.n_eff, 6) +
            ", eta_slot " + detail::format_sci(mode.slot_fraction, 4) + ", m_opt " +
            std::to_string(match.optical_order) + ", " + std::to_string(optical->mesh.cell_count()) + " cells");
    }

    const std::size_t per_bc = config.acoustic_q.size();
    for (std::size_t b = 0; b < config.boundaries.size(); ++b) {
        const auto bc = config.boundaries[b];
        const std::size_t first = b * per_bc;
        try {
            auto acoustic =
                solve_acoustic_mode(geometry, fluid, match.acoustic_order, bc, config.acoustic_mesh);
            const double k_bulk = fluid.acoustics().bulk_modulus;
            const double p_zp = zero_point_normalize(acoustic, k_bulk);
            const double half_quantum = 0.5 * PhysicalConstants::hbar * acoustic.omega;
            const double energy_error = std::abs(strain_energy(acoustic) / half_quantum - 1.0);
            const auto coupling = coupling_rate(mode, acoustic, optical->mesh, fluid.permittivity);
            const double oracle =
                uniform_field_oracle(mode.slot_fraction, p_zp, k_bulk, mode.omega, fluid.permittivity);
            for (std::size_t k = first; k < first + per_bc; ++k) {
                DesignReport& r = rows[k];
                r.n_eff = mode.n_eff;
                r.eta_slot = mode.slot_fraction;
                r.optical_order = match.optical_order;
                r.acoustic_order = match.acoustic_order;
                r.omega_b = acoustic.omega;
                r.g0 = coupling.g0;
                r.zero_point_pressure = p_zp;
                r.strain_energy_error = energy_error;
                r.g0_uniform_estimate = oracle;
                complete_metrics(r, mode.omega);
            }
            if (log) {
                log("width " + detail::format_sci(width, 4) + " m, " + std::string(to_string(bc)) + ": Omega_B/2pi " +
                    detail::format_sci(to_hz(acoustic.omega), 5) + " Hz, p_zp " + detail::format_sci(p_zp, 4) +
                    " Pa, g0/2pi " + detail::format_sci(to_hz(coupling.g0), 5) + " Hz");
            }
        } catch (const std::exception& e) {
            fail_rows(first, first + per_bc, e.what());
        }
    }
    return rows;
}

std::size_t resolve_workers(std::size_t requested, std::size_t jobs) {
    std::size_t n = requested;
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(n, jobs));
}

std::vector<DesignReport> run_sweep(const SweepConfig& config, const LogFn& log) {
    const std::size_t jobs = config.widths.size();
    std::vector<std::vector<DesignReport>> slots(jobs);
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    LogFn locked;
    if (log) {
        locked = [&](const std::string& line) {
            const std::scoped_lock lock(log_mutex);
            log(line);
        };
    }
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs; k = next++) {
            slots[k] = evaluate_width(config, config.widths[k], locked);
        }
    };

    const std::size_t workers = resolve_workers(config.workers, jobs);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    }

    std::vector<DesignReport> out;
    out.reserve(jobs * config.boundaries.size() * config.acoustic_q.size());
    for (auto& s : slots) {
        for (auto& r : s) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace slotbrillouin
