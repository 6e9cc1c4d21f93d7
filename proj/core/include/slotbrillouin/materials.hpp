#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slotbrillouin {

struct AcousticProperties {
    double density = 0.0;       // kg/m^3
    double sound_speed = 0.0;   // m/s
    double bulk_modulus = 0.0;  // Pa, = density * sound_speed^2
};

struct Material {
    std::string name;
    double permittivity = 1.0;  // relative, at the design wavelength
    double index = 1.0;         // sqrt(permittivity)
    std::optional<AcousticProperties> acoustic;

    // Builds a record from the refractive index; acoustic data optional.
    static Material from_index(std::string name, double index,
                               std::optional<AcousticProperties> acoustic = std::nullopt);

    [[nodiscard]] bool has_acoustics() const noexcept { return acoustic.has_value(); }
    // Throws StateError when the material carries no acoustic data.
    [[nodiscard]] const AcousticProperties& acoustics() const;
};

/// Clausius-Mossotti electrostrictive constant, rho * d(eps_r)/d(rho).
/// Throws DomainError for eps_r < 1.
double electrostrictive_constant(double permittivity);

/// gamma_e / sqrt(K): permittivity change per unit strain energy, a
/// material-level Brillouin figure of merit in Pa^-1/2.
double material_fom(double electrostrictive, double bulk_modulus);

/// Immutable table of materials parsed from the plain-text data format
/// (see core/data/materials.txt). Safe for concurrent reads.
class MaterialLibrary {
public:
    static MaterialLibrary parse(std::string_view text);
    static MaterialLibrary load(const std::filesystem::path& path);
    // The table compiled in from core/data/materials.txt.
    static const MaterialLibrary& builtin();

    [[nodiscard]] const Material& get(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const;
    [[nodiscard]] std::vector<std::string> names() const;

private:
    std::map<std::string, Material, std::less<>> materials_;
};

/// Looks up one of the shipped materials (silicon, silica, helium, vacuum).
const Material& builtin_material(std::string_view name);

}  // namespace slotbrillouin
