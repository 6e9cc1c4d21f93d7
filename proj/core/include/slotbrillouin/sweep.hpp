#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slotbrillouin/config.hpp"
#include "slotbrillouin/metrics.hpp"
#include "slotbrillouin/optical.hpp"

namespace slotbrillouin {

using LogFn = std::function<void(const std::string&)>;

/// Index of the slot mode among solved modes: the highest-index guided,
/// TE-like mode with even Ex mirror parity. Empty when none qualifies.
std::optional<std::size_t> pick_slot_mode(const std::vector<OpticalMode>& modes);

struct OpticalSolution {
    Mesh2D mesh;
    OpticalMode mode;
};

/// Mesh and slot mode for one geometry. Throws when no slot mode is found.
OpticalSolution solve_slot_mode(const SlotRingGeometry& geometry, const SweepConfig& config);

/// All reports for one slot width: one per (boundary, Q) in config order.
/// Errors are caught and recorded in the status of the affected rows.
std::vector<DesignReport> evaluate_width(const SweepConfig& config, double width, const LogFn& log = {});

/// Full sweep. Rows are ordered by width, then boundary tag, then Q, however
/// the points were scheduled over `config.workers` threads.
std::vector<DesignReport> run_sweep(const SweepConfig& config, const LogFn& log = {});

std::size_t resolve_workers(std::size_t requested, std::size_t jobs);

}  // namespace slotbrillouin
