#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/capillary.hpp"
#include "slotbrillouin/mesh.hpp"

namespace slotbrillouin {

struct CapillaryConfig {
    double film_thickness = 2e-9;
    double surface_tension = HeliumFilmConstants::surface_tension;
    double vdw_coefficient = HeliumFilmConstants::vdw_coefficient;
};

struct SweepConfig {
    SlotRingGeometry geometry;
    std::vector<double> widths;  // m, ascending
    std::vector<TopBoundary> boundaries{TopBoundary::sealed, TopBoundary::open};
    double wavelength = kDefaultWavelength;
    double kappa = kTwoPi * 1e9;  // rad/s
    std::vector<double> acoustic_q{1e4, 1e5, 1e8};
    double temperature = 20e-3;  // K
    MeshSpec mesh;
    AcousticMeshSpec acoustic_mesh;
    int mode_count = 2;          // optical modes requested per width
    double n_eff_guess = 2.0;    // shift for the optical eigensolver
    std::optional<long> expected_optical_order;  // checked against the geometry, never imposed
    std::optional<std::string> materials_file;
    std::string out_csv;         // empty = not written
    std::string out_svg;
    std::size_t workers = 0;     // 0 = hardware concurrency
    std::optional<CapillaryConfig> capillary;

    /// 21 log-spaced widths from 5 nm to 150 nm.
    static std::vector<double> default_widths();
};

// All problems found in a configuration, one path-qualified message each.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> messages);
    [[nodiscard]] const std::vector<std::string>& messages() const noexcept { return messages_; }

private:
    std::vector<std::string> messages_;
};

/// Parses and validates a JSON configuration. Whitespace-only input yields
/// the defaults. Unknown keys are rejected with the closest valid key.
/// Throws ConfigError listing every problem found.
SweepConfig validate_config(std::string_view text);

/// Reads a configuration file; an unreadable file throws IoError.
SweepConfig load_config(const std::string& path);

/// SLOTBRILLOUIN_OUT_CSV, SLOTBRILLOUIN_OUT_SVG and SLOTBRILLOUIN_WORKERS
/// override the corresponding fields when set.
void apply_environment(SweepConfig& config);

/// Non-fatal findings, such as an expected optical order that no available
/// index can reach at the configured radius and wavelength.
std::vector<std::string> config_warnings(const SweepConfig& config);

/// The effective configuration as pretty-printed JSON.
std::string config_to_json(const SweepConfig& config);

/// log-spaced values lo .. hi inclusive.
std::vector<double> log_space(double lo, double hi, std::size_t count);

}  // namespace slotbrillouin
