#include "slotbrillouin/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slotbrillouin/errors.hpp"
#include "slotbrillouin/materials.hpp"
#include "slotbrillouin/optical.hpp"
#include "text_util.hpp"

namespace slotbrillouin {

namespace {

using nlohmann::json;

std::string join_messages(const std::vector<std::string>& messages) {
    std::string out = "invalid configuration:";
    for (const auto& m : messages) out += "\n  " + m;
    return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

// Walks one JSON object, dispatching known keys and recording everything
// that goes wrong under its path.
class Section {
public:
    using Handler = std::function<void(const json&, const std::string&)>;

    Section(std::vector<std::string>& errors, std::string path) : errors_(errors), path_(std::move(path)) {}

    Section& on(std::string key, Handler h) {
        handlers_.emplace(std::move(key), std::move(h));
        return *this;
    }

    void run(const json& node) {
        if (!node.is_object()) {
            errors_.push_back(path_ + ": expected an object");
            return;
        }
        for (const auto& [key, value] : node.items()) {
            const auto it = handlers_.find(key);
            if (it == handlers_.end()) {
                errors_.push_back(path_ + "." + key + ": unknown key" + suggestion(key));
                continue;
            }
            it->second(value, path_ + "." + key);
        }
    }

private:
    std::string suggestion(const std::string& key) const {
        std::string best;
        std::size_t best_d = std::string::npos;
        for (const auto& [k, h] : handlers_) {
            const auto d = edit_distance(key, k);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        if (best.empty() || best_d > std::max<std::size_t>(3, key.size() / 2)) return "";
        return " (did you mean '" + best + "'?)";
    }

    std::vector<std::string>& errors_;
    std::string path_;
    std::map<std::string, Handler> handlers_;
};

struct Reader {
    std::vector<std::string>& errors;

    std::optional<double> number(const json& v, const std::string& path, double lo, double hi,
                                 bool lo_open = false) {
        if (!v.is_number()) {
            errors.push_back(path + ": expected a number");
            return std::nullopt;
        }
        const double x = v.get<double>();
        if (!std::isfinite(x) || (lo_open ? !(x > lo) : !(x >= lo)) || !(x <= hi)) {
            std::ostringstream msg;
            msg << path << ": value " << detail::format_exact(x) << " outside " << (lo_open ? "(" : "[")
                << detail::format_exact(lo) << ", " << detail::format_exact(hi) << "]";
            errors.push_back(msg.str());
            return std::nullopt;
        }
        return x;
    }

    std::optional<long long> integer(const json& v, const std::string& path, long long lo, long long hi) {
        if (!v.is_number_integer()) {
            errors.push_back(path + ": expected an integer");
            return std::nullopt;
        }
        const auto x = v.get<long long>();
        if (x < lo || x > hi) {
            errors.push_back(path + ": value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
            return std::nullopt;
        }
        return x;
    }

    std::optional<std::string> string(const json& v, const std::string& path) {
        if (!v.is_string()) {
            errors.push_back(path + ": expected a string");
            return std::nullopt;
        }
        return v.get<std::string>();
    }

    std::optional<bool> boolean(const json& v, const std::string& path) {
        if (!v.is_boolean()) {
            errors.push_back(path + ": expected true or false");
            return std::nullopt;
        }
        return v.get<bool>();
    }
};

constexpr double kMinWidth = 1e-9;
constexpr double kMaxWidth = 500e-9;
constexpr double kHuge = 1e300;

}  // namespace

ConfigError::ConfigError(std::vector<std::string> messages)
    : std::runtime_error(join_messages(messages)), messages_(std::move(messages)) {}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
    if (count == 1) return {lo};
    std::vector<double> v(count);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t k = 0; k < count; ++k) {
        v[k] = std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
    }
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<double> SweepConfig::default_widths() { return log_space(5e-9, 150e-9, 21); }

SweepConfig validate_config(std::string_view text) {
    SweepConfig cfg;
    cfg.widths = SweepConfig::default_widths();
    if (detail::trim(text).empty()) return cfg;

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("$: not valid JSON: ") + e.what()});
    }

    std::vector<std::string> errors;
    Reader rd{errors};
    struct MaterialNames {
        std::optional<std::string> rail, substrate, cladding, fill;
    } names;
    bool widths_given = false;
    bool range_given = false;

    Section geometry(errors, "$.geometry");
    geometry
        .on("outer_radius_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1.0, true)) cfg.geometry.outer_radius = *x;
        })
        .on("slot_width_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, kMinWidth, kMaxWidth)) cfg.geometry.slot_width = *x;
        })
        .on("slot_height_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e-3, true)) cfg.geometry.height = *x;
        })
        .on("rail_width_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e-3, true)) cfg.geometry.rail_width = *x;
        })
        .on("top", [&](const json& v, const std::string& p) {
            if (auto s = rd.string(v, p)) {
                try {
                    cfg.geometry.top = parse_top_boundary(*s);
                } catch (const ParseError& e) {
                    errors.push_back(p + ": " + e.what());
                }
            }
        })
        .on("rail_material", [&](const json& v, const std::string& p) { names.rail = rd.string(v, p); })
        .on("substrate_material", [&](const json& v, const std::string& p) { names.substrate = rd.string(v, p); })
        .on("cladding_material", [&](const json& v, const std::string& p) { names.cladding = rd.string(v, p); })
        .on("fill_material", [&](const json& v, const std::string& p) { names.fill = rd.string(v, p); });

    Section mesh(errors, "$.mesh");
    mesh.on("background_cell_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e-6, true)) cfg.mesh.background_cell = *x;
        })
        .on("slot_cells", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 1, 1000)) cfg.mesh.slot_cells = static_cast<int>(*x);
        })
        .on("grading", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 1.0, 3.0, true)) cfg.mesh.grading = *x;
        })
        .on("max_cell_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e-5, true)) cfg.mesh.max_cell = *x;
        })
        .on("padding_wavelengths", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 20.0, true)) cfg.mesh.padding_wavelengths = *x;
        })
        .on("cell_budget", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 1, 100000000)) cfg.mesh.cell_budget = static_cast<std::size_t>(*x);
        });

    Section acoustic_mesh(errors, "$.acoustic_mesh");
    acoustic_mesh
        .on("nx", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 1, 4096)) cfg.acoustic_mesh.nx = static_cast<int>(*x);
        })
        .on("ny", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 2, 4096)) cfg.acoustic_mesh.ny = static_cast<int>(*x);
        });

    Section optical(errors, "$.optical");
    optical
        .on("mode_count", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 1, 10)) cfg.mode_count = static_cast<int>(*x);
        })
        .on("n_eff_guess", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 10.0, true)) cfg.n_eff_guess = *x;
        })
        .on("expected_order", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 1, 100000000)) cfg.expected_optical_order = static_cast<long>(*x);
        });

    Section output(errors, "$.output");
    output.on("csv", [&](const json& v, const std::string& p) { cfg.out_csv = rd.string(v, p).value_or(""); })
        .on("svg", [&](const json& v, const std::string& p) { cfg.out_svg = rd.string(v, p).value_or(""); });

    CapillaryConfig cap;
    Section capillary(errors, "$.capillary");
    capillary
        .on("film_thickness_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e-6, true)) cap.film_thickness = *x;
        })
        .on("surface_tension_N_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1.0)) cap.surface_tension = *x;
        })
        .on("vdw_coefficient_J", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e-15, true)) cap.vdw_coefficient = *x;
        });

    struct Range {
        double lo = 5e-9, hi = 150e-9;
        long long count = 21;
        bool log = true;
    } range;
    Section width_range(errors, "$.width_range");
    width_range
        .on("min_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, kMinWidth, kMaxWidth)) range.lo = *x;
        })
        .on("max_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, kMinWidth, kMaxWidth)) range.hi = *x;
        })
        .on("count", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 1, 10000)) range.count = *x;
        })
        .on("spacing", [&](const json& v, const std::string& p) {
            if (auto s = rd.string(v, p)) {
                if (*s == "log") {
                    range.log = true;
                } else if (*s == "linear") {
                    range.log = false;
                } else {
                    errors.push_back(p + ": expected \"log\" or \"linear\"");
                }
            }
        });

    Section top(errors, "$");
    top.on("geometry", [&](const json& v, const std::string&) { geometry.run(v); })
        .on("mesh", [&](const json& v, const std::string&) { mesh.run(v); })
        .on("acoustic_mesh", [&](const json& v, const std::string&) { acoustic_mesh.run(v); })
        .on("optical", [&](const json& v, const std::string&) { optical.run(v); })
        .on("output", [&](const json& v, const std::string&) { output.run(v); })
        .on("capillary", [&](const json& v, const std::string&) {
            capillary.run(v);
            cfg.capillary = CapillaryConfig{};
        })
        .on("width_range", [&](const json& v, const std::string&) {
            range_given = true;
            width_range.run(v);
        })
        .on("widths_m", [&](const json& v, const std::string& p) {
            widths_given = true;
            if (!v.is_array() || v.empty()) {
                errors.push_back(p + ": expected a non-empty array of widths");
                return;
            }
            cfg.widths.clear();
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (auto x = rd.number(v[k], p + "[" + std::to_string(k) + "]", kMinWidth, kMaxWidth)) {
                    cfg.widths.push_back(*x);
                }
            }
        })
        .on("boundaries", [&](const json& v, const std::string& p) {
            if (!v.is_array() || v.empty()) {
                errors.push_back(p + ": expected a non-empty array of \"sealed\"/\"open\"");
                return;
            }
            cfg.boundaries.clear();
            for (std::size_t k = 0; k < v.size(); ++k) {
                const auto item = p + "[" + std::to_string(k) + "]";
                auto s = rd.string(v[k], item);
                if (!s) continue;
                try {
                    const auto bc = parse_top_boundary(*s);
                    if (std::find(cfg.boundaries.begin(), cfg.boundaries.end(), bc) != cfg.boundaries.end()) {
                        errors.push_back(item + ": duplicate boundary tag '" + *s + "'");
                    } else {
                        cfg.boundaries.push_back(bc);
                    }
                } catch (const ParseError& e) {
                    errors.push_back(item + ": " + e.what());
                }
            }
        })
        .on("wavelength_m", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 100e-9, 100e-6)) cfg.wavelength = *x;
        })
        .on("kappa_rad_s", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e16, true)) cfg.kappa = *x;
        })
        .on("acoustic_q", [&](const json& v, const std::string& p) {
            if (!v.is_array() || v.empty()) {
                errors.push_back(p + ": expected a non-empty array of quality factors");
                return;
            }
            cfg.acoustic_q.clear();
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (auto x = rd.number(v[k], p + "[" + std::to_string(k) + "]", 0.0, kHuge, true)) {
                    cfg.acoustic_q.push_back(*x);
                }
            }
        })
        .on("temperature_K", [&](const json& v, const std::string& p) {
            if (auto x = rd.number(v, p, 0.0, 1e4)) cfg.temperature = *x;
        })
        .on("conformal", [&](const json& v, const std::string& p) {
            if (auto b = rd.boolean(v, p)) cfg.mesh.conformal = *b;
        })
        .on("materials_file", [&](const json& v, const std::string& p) { cfg.materials_file = rd.string(v, p); })
        .on("workers", [&](const json& v, const std::string& p) {
            if (auto x = rd.integer(v, p, 0, 4096)) cfg.workers = static_cast<std::size_t>(*x);
        });
    top.run(root);
    if (cfg.capillary) cfg.capillary = cap;

    // Cross-field checks.
    if (widths_given && range_given) {
        errors.emplace_back("$: give either widths_m or width_range, not both");
    } else if (range_given) {
        if (!(range.lo <= range.hi)) {
            errors.emplace_back("$.width_range: min_m must not exceed max_m");
        } else if (range.log) {
            cfg.widths = log_space(range.lo, range.hi, static_cast<std::size_t>(range.count));
        } else {
            cfg.widths.clear();
            for (long long k = 0; k < range.count; ++k) {
                cfg.widths.push_back(range.count == 1 ? range.lo
                                                      : range.lo + (range.hi - range.lo) * static_cast<double>(k) /
                                                                       static_cast<double>(range.count - 1));
            }
        }
    }
    std::sort(cfg.widths.begin(), cfg.widths.end());
    if (std::adjacent_find(cfg.widths.begin(), cfg.widths.end()) != cfg.widths.end()) {
        errors.emplace_back("$.widths_m: duplicate widths");
    }
    if (cfg.mesh.max_cell < cfg.mesh.background_cell) {
        errors.emplace_back("$.mesh.max_cell_m: must be >= background_cell_m");
    }
    cfg.mesh.wavelength = cfg.wavelength;

    // Materials resolve against the built-in table or the given file.
    std::optional<MaterialLibrary> file_library;
    if (cfg.materials_file) {
        try {
            file_library = MaterialLibrary::load(*cfg.materials_file);
        } catch (const std::exception& e) {
            errors.push_back("$.materials_file: " + std::string(e.what()));
        }
    }
    auto resolve = [&](const std::optional<std::string>& name, Material& slot, const char* key) {
        if (!name) return;
        const std::string path = std::string("$.geometry.") + key;
        try {
            slot = file_library ? file_library->get(*name) : MaterialLibrary::builtin().get(*name);
        } catch (const NotFoundError& e) {
            errors.push_back(path + ": " + e.what());
        }
    };
    resolve(names.rail, cfg.geometry.rail, "rail_material");
    resolve(names.substrate, cfg.geometry.substrate, "substrate_material");
    resolve(names.cladding, cfg.geometry.cladding, "cladding_material");
    resolve(names.fill, cfg.geometry.slot_fill, "fill_material");
    if (!cfg.geometry.slot_fill.has_acoustics()) {
        errors.push_back("$.geometry.fill_material: '" + cfg.geometry.slot_fill.name +
                         "' has no acoustic data (density and sound speed)");
    }
    for (double w : cfg.widths) {
        SlotRingGeometry g = cfg.geometry;
        g.slot_width = w;
        try {
            g.validate();
        } catch (const DomainError& e) {
            errors.push_back("$.geometry: at width " + detail::format_exact(w) + ": " + e.what());
            break;
        }
    }

    if (!errors.empty()) throw ConfigError(std::move(errors));
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open configuration '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading configuration '" + path + "'");
    return validate_config(buf.str());
}

void apply_environment(SweepConfig& cfg) {
    if (const char* v = std::getenv("SLOTBRILLOUIN_OUT_CSV"); v && *v) cfg.out_csv = v;
    if (const char* v = std::getenv("SLOTBRILLOUIN_OUT_SVG"); v && *v) cfg.out_svg = v;
    if (const char* v = std::getenv("SLOTBRILLOUIN_WORKERS"); v && *v) {
        const auto n = detail::parse_int(v);
        if (!n || *n < 0) throw ConfigError({"SLOTBRILLOUIN_WORKERS: expected a non-negative integer"});
        cfg.workers = static_cast<std::size_t>(*n);
    }
}

std::vector<std::string> config_warnings(const SweepConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.expected_optical_order) {
        const auto& g = cfg.geometry;
        const double max_index = std::sqrt(std::max({g.rail.permittivity, g.substrate.permittivity,
                                                     g.cladding.permittivity, g.slot_fill.permittivity}));
        for (double w : cfg.widths) {
            SlotRingGeometry at = g;
            at.slot_width = w;
            if (auto msg = check_resonance_order(*cfg.expected_optical_order, at.slot_center_radius(), cfg.wavelength,
                                                 max_index)) {
                out.push_back("$.optical.expected_order: " + *msg + "; m_opt is taken from the solved n_eff instead");
                break;
            }
        }
    }
    return out;
}

std::string config_to_json(const SweepConfig& cfg) {
    json j;
    j["geometry"] = {{"outer_radius_m", cfg.geometry.outer_radius},
                     {"slot_width_m", cfg.geometry.slot_width},
                     {"slot_height_m", cfg.geometry.height},
                     {"rail_width_m", cfg.geometry.rail_width},
                     {"top", std::string(to_string(cfg.geometry.top))},
                     {"rail_material", cfg.geometry.rail.name},
                     {"substrate_material", cfg.geometry.substrate.name},
                     {"cladding_material", cfg.geometry.cladding.name},
                     {"fill_material", cfg.geometry.slot_fill.name}};
    j["widths_m"] = cfg.widths;
    std::vector<std::string> bcs;
    for (auto bc : cfg.boundaries) bcs.emplace_back(to_string(bc));
    j["boundaries"] = bcs;
    j["wavelength_m"] = cfg.wavelength;
    j["kappa_rad_s"] = cfg.kappa;
    j["acoustic_q"] = cfg.acoustic_q;
    j["temperature_K"] = cfg.temperature;
    j["conformal"] = cfg.mesh.conformal;
    j["mesh"] = {{"background_cell_m", cfg.mesh.background_cell},
                 {"slot_cells", cfg.mesh.slot_cells},
                 {"grading", cfg.mesh.grading},
                 {"max_cell_m", cfg.mesh.max_cell},
                 {"padding_wavelengths", cfg.mesh.padding_wavelengths},
                 {"cell_budget", cfg.mesh.cell_budget}};
    j["acoustic_mesh"] = {{"nx", cfg.acoustic_mesh.nx}, {"ny", cfg.acoustic_mesh.ny}};
    j["optical"] = {{"mode_count", cfg.mode_count}, {"n_eff_guess", cfg.n_eff_guess}};
    if (cfg.expected_optical_order) j["optical"]["expected_order"] = *cfg.expected_optical_order;
    j["output"] = {{"csv", cfg.out_csv}, {"svg", cfg.out_svg}};
    j["workers"] = cfg.workers;
    if (cfg.materials_file) j["materials_file"] = *cfg.materials_file;
    if (cfg.capillary) {
        j["capillary"] = {{"film_thickness_m", cfg.capillary->film_thickness},
                          {"surface_tension_N_m", cfg.capillary->surface_tension},
                          {"vdw_coefficient_J", cfg.capillary->vdw_coefficient}};
    }
    return j.dump(2);
}

}  // namespace slotbrillouin
