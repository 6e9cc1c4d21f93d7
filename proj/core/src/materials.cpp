#include "slotbrillouin/materials.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "slotbrillouin/errors.hpp"
#include "text_util.hpp"

namespace slotbrillouin {

namespace detail {
extern const std::string_view kBuiltinMaterialsText;
}

namespace {

constexpr double kModulusTolerance = 1e-9;

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out;
}

Material parse_record(std::string_view line, std::size_t line_no) {
    static const std::set<std::string, std::less<>> kKeys{"name", "n", "rho", "c", "K"};
    std::map<std::string, std::string, std::less<>> fields;
    std::istringstream tokens{std::string(line)};
    std::string token;
    const auto where = "materials line " + std::to_string(line_no) + ": ";
    while (tokens >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError(where + "expected key=value, got '" + token + "'");
        auto key = token.substr(0, eq);
        if (!kKeys.contains(key)) throw ParseError(where + "unknown key '" + key + "'");
        if (fields.contains(key)) throw ParseError(where + "duplicate key '" + key + "'");
        fields.emplace(std::move(key), token.substr(eq + 1));
    }
    if (!fields.contains("name") || fields["name"].empty()) throw ParseError(where + "missing name");
    if (!fields.contains("n")) throw ParseError(where + "missing n");

    auto number = [&](std::string_view key) {
        const auto value = detail::parse_double(fields.find(key)->second);
        if (!value || !std::isfinite(*value)) throw ParseError(where + "bad number for '" + std::string(key) + "'");
        return *value;
    };

    const double index = number("n");
    if (index < 1.0) throw ParseError(where + "refractive index must be >= 1");

    std::optional<AcousticProperties> acoustic;
    const bool has_rho = fields.contains("rho");
    const bool has_c = fields.contains("c");
    const bool has_k = fields.contains("K");
    if (has_rho || has_c || has_k) {
        if (!has_rho || (!has_c && !has_k)) {
            throw ParseError(where + "acoustic data needs rho and at least one of c, K");
        }
        AcousticProperties a;
        a.density = number("rho");
        if (a.density <= 0.0) throw ParseError(where + "rho must be positive");
        if (has_c) {
            a.sound_speed = number("c");
            if (a.sound_speed <= 0.0) throw ParseError(where + "c must be positive");
            a.bulk_modulus = a.density * a.sound_speed * a.sound_speed;
        }
        if (has_k) {
            const double k = number("K");
            if (k <= 0.0) throw ParseError(where + "K must be positive");
            if (has_c && std::abs(k - a.bulk_modulus) > kModulusTolerance * a.bulk_modulus) {
                throw ParseError(where + "K disagrees with rho*c^2");
            }
            if (!has_c) {
                a.bulk_modulus = k;
                a.sound_speed = std::sqrt(k / a.density);
            }
        }
        acoustic = a;
    }
    return Material::from_index(fields["name"], index, acoustic);
}

}  // namespace

Material Material::from_index(std::string name, double index, std::optional<AcousticProperties> acoustic) {
    if (!(index >= 1.0)) throw DomainError("refractive index must be >= 1 for " + name);
    Material m;
    m.name = std::move(name);
    m.index = index;
    m.permittivity = index * index;
    m.acoustic = acoustic;
    return m;
}

const AcousticProperties& Material::acoustics() const {
    if (!acoustic) throw StateError("material '" + name + "' has no acoustic properties");
    return *acoustic;
}

double electrostrictive_constant(double permittivity) {
    if (!(permittivity >= 1.0)) {
        throw DomainError("electrostrictive_constant: relative permittivity < 1 is non-physical");
    }
    return (permittivity - 1.0) * (permittivity + 2.0) / 3.0;
}

double material_fom(double electrostrictive, double bulk_modulus) {
    if (!(bulk_modulus > 0.0)) throw DomainError("material_fom: bulk modulus must be positive");
    return electrostrictive / std::sqrt(bulk_modulus);
}

MaterialLibrary MaterialLibrary::parse(std::string_view text) {
    MaterialLibrary lib;
    bool saw_version = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (!saw_version) {
            if (line != "format-version 1") {
                throw ParseError("materials line " + std::to_string(line_no) +
                                 ": expected 'format-version 1' header");
            }
            saw_version = true;
            continue;
        }
        auto material = parse_record(line, line_no);
        if (lib.materials_.contains(material.name)) {
            throw ParseError("materials line " + std::to_string(line_no) + ": duplicate material '" +
                             material.name + "'");
        }
        auto key = material.name;
        lib.materials_.emplace(std::move(key), std::move(material));
    }
    if (!saw_version) throw ParseError("materials: missing 'format-version 1' header");
    return lib;
}

MaterialLibrary MaterialLibrary::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw NotFoundError("cannot open materials file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const MaterialLibrary& MaterialLibrary::builtin() {
    static const MaterialLibrary lib = parse(detail::kBuiltinMaterialsText);
    return lib;
}

const Material& MaterialLibrary::get(std::string_view name) const {
    const auto it = materials_.find(name);
    if (it == materials_.end()) {
        throw NotFoundError("unknown material '" + std::string(name) + "'; available: " + join(names()));
    }
    return it->second;
}

bool MaterialLibrary::contains(std::string_view name) const { return materials_.find(name) != materials_.end(); }

std::vector<std::string> MaterialLibrary::names() const {
    std::vector<std::string> out;
    out.reserve(materials_.size());
    for (const auto& [name, _] : materials_) out.push_back(name);
    return out;
}

const Material& builtin_material(std::string_view name) { return MaterialLibrary::builtin().get(name); }

}  // namespace slotbrillouin
