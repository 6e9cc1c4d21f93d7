#include "slotbrillouin/field_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "slotbrillouin/errors.hpp"
#include "text_util.hpp"

namespace slotbrillouin {

namespace {

using detail::format_exact;

class TokenReader {
public:
    TokenReader(std::istream& in, std::string_view what) : in_(in), what_(what) {}

    std::string word() {
        std::string t;
        while (in_ >> t) {
            if (t.front() != '#') return t;
            std::string rest;
            std::getline(in_, rest);
        }
        throw ParseError(std::string(what_) + ": unexpected end of input");
    }
    void expect(std::string_view key) {
        const auto t = word();
        if (t != key) throw ParseError(std::string(what_) + ": expected '" + std::string(key) + "', got '" + t + "'");
    }
    double number() {
        const auto t = word();
        const auto v = detail::parse_double(t);
        if (!v) throw ParseError(std::string(what_) + ": bad number '" + t + "'");
        return *v;
    }
    long long integer() {
        const auto t = word();
        const auto v = detail::parse_int(t);
        if (!v) throw ParseError(std::string(what_) + ": bad integer '" + t + "'");
        return *v;
    }
    double keyed(std::string_view key) {
        expect(key);
        return number();
    }
    std::size_t size(std::string_view key) {
        expect(key);
        const auto v = integer();
        if (v < 0) throw ParseError(std::string(what_) + ": negative size for " + std::string(key));
        return static_cast<std::size_t>(v);
    }

private:
    std::istream& in_;
    std::string_view what_;
};

void write_grid(std::ostream& out, std::string_view name, const std::vector<double>& v, std::size_t rows,
                std::size_t cols) {
    out << name << ' ' << rows << ' ' << cols << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) out << (c ? " " : "") << format_exact(v[r * cols + c]);
        out << '\n';
    }
}

void write_grid(std::ostream& out, std::string_view name, const std::vector<std::complex<double>>& v,
                std::size_t rows, std::size_t cols) {
    out << name << ' ' << rows << ' ' << cols << " complex\n";
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto z = v[r * cols + c];
            out << (c ? " " : "") << format_exact(z.real()) << ' ' << format_exact(z.imag());
        }
        out << '\n';
    }
}

std::vector<double> read_grid(TokenReader& tr, std::string_view name, std::size_t rows, std::size_t cols) {
    tr.expect(name);
    if (tr.integer() != static_cast<long long>(rows) || tr.integer() != static_cast<long long>(cols)) {
        throw ParseError("grid '" + std::string(name) + "' has unexpected dimensions");
    }
    std::vector<double> v(rows * cols);
    for (double& x : v) x = tr.number();
    return v;
}

std::vector<std::complex<double>> read_complex_grid(TokenReader& tr, std::string_view name, std::size_t rows,
                                                    std::size_t cols) {
    tr.expect(name);
    if (tr.integer() != static_cast<long long>(rows) || tr.integer() != static_cast<long long>(cols)) {
        throw ParseError("grid '" + std::string(name) + "' has unexpected dimensions");
    }
    tr.expect("complex");
    std::vector<std::complex<double>> v(rows * cols);
    for (auto& z : v) {
        const double re = tr.number();
        z = {re, tr.number()};
    }
    return v;
}

char region_tag(Region r) {
    switch (r) {
        case Region::silicon: return 'S';
        case Region::silica: return 'O';
        case Region::helium_slot: return 'H';
        case Region::cladding: return '.';
    }
    return '?';
}

Region region_from_tag(char c) {
    switch (c) {
        case 'S': return Region::silicon;
        case 'O': return Region::silica;
        case 'H': return Region::helium_slot;
        case '.': return Region::cladding;
        default: throw ParseError(std::string("mesh: unknown region tag '") + c + "'");
    }
}

template <typename Fn>
void save_file(const std::string& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    fn(out);
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void write_mesh(std::ostream& out, const Mesh2D& mesh) {
    out << "# slotbrillouin mesh v1\n";
    const Rect& s = mesh.slot();
    out << "slot " << format_exact(s.x0) << ' ' << format_exact(s.x1) << ' ' << format_exact(s.y0) << ' '
        << format_exact(s.y1) << '\n';
    write_grid(out, "x_edges", mesh.x_edges(), 1, mesh.x_edges().size());
    write_grid(out, "y_edges", mesh.y_edges(), 1, mesh.y_edges().size());
    out << "regions " << mesh.ny() << ' ' << mesh.nx() << '\n';
    for (std::size_t j = 0; j < mesh.ny(); ++j) {
        std::string row(mesh.nx(), '.');
        for (std::size_t i = 0; i < mesh.nx(); ++i) row[i] = region_tag(mesh.region(i, j));
        out << row << '\n';
    }
    write_grid(out, "permittivity", mesh.permittivity(), mesh.ny(), mesh.nx());
}

Mesh2D read_mesh(std::istream& in) {
    TokenReader tr(in, "mesh");
    tr.expect("slot");
    Rect slot;
    slot.x0 = tr.number();
    slot.x1 = tr.number();
    slot.y0 = tr.number();
    slot.y1 = tr.number();
    tr.expect("x_edges");
    if (tr.integer() != 1) throw ParseError("mesh: x_edges must be a single row");
    const auto nxe = static_cast<std::size_t>(tr.integer());
    std::vector<double> xe(nxe);
    for (double& x : xe) x = tr.number();
    tr.expect("y_edges");
    if (tr.integer() != 1) throw ParseError("mesh: y_edges must be a single row");
    const auto nye = static_cast<std::size_t>(tr.integer());
    std::vector<double> ye(nye);
    for (double& y : ye) y = tr.number();
    if (nxe < 2 || nye < 2) throw ParseError("mesh: need at least two edges per axis");
    const std::size_t nx = nxe - 1;
    const std::size_t ny = nye - 1;
    tr.expect("regions");
    if (tr.integer() != static_cast<long long>(ny) || tr.integer() != static_cast<long long>(nx)) {
        throw ParseError("mesh: region grid has unexpected dimensions");
    }
    std::vector<Region> regions;
    regions.reserve(nx * ny);
    for (std::size_t j = 0; j < ny; ++j) {
        const auto row = tr.word();
        if (row.size() != nx) throw ParseError("mesh: region row " + std::to_string(j) + " has wrong length");
        for (char c : row) regions.push_back(region_from_tag(c));
    }
    auto eps = read_grid(tr, "permittivity", ny, nx);
    return Mesh2D(std::move(xe), std::move(ye), std::move(regions), std::move(eps), slot);
}

void write_optical_mode(std::ostream& out, const OpticalMode& m) {
    out << "# slotbrillouin optical-mode v1\n";
    out << "nx " << m.nx << "\nny " << m.ny << '\n';
    out << "wavelength " << format_exact(m.wavelength) << '\n';
    out << "omega " << format_exact(m.omega) << '\n';
    out << "n_eff " << format_exact(m.n_eff) << '\n';
    out << "polarization " << to_string(m.polarization) << '\n';
    out << "slot_fraction " << format_exact(m.slot_fraction) << '\n';
    out << "residual " << format_exact(m.residual) << '\n';
    out << "guided " << (m.guided ? 1 : 0) << '\n';
    write_grid(out, "ex", m.ex, m.ny + 1, m.nx);
    write_grid(out, "ey", m.ey, m.ny, m.nx + 1);
    write_grid(out, "ez", m.ez, m.ny + 1, m.nx + 1);
}

OpticalMode read_optical_mode(std::istream& in) {
    TokenReader tr(in, "optical mode");
    OpticalMode m;
    m.nx = tr.size("nx");
    m.ny = tr.size("ny");
    m.wavelength = tr.keyed("wavelength");
    m.omega = tr.keyed("omega");
    m.n_eff = tr.keyed("n_eff");
    tr.expect("polarization");
    const auto pol = tr.word();
    if (pol == to_string(Polarization::te_like)) {
        m.polarization = Polarization::te_like;
    } else if (pol == to_string(Polarization::tm_like)) {
        m.polarization = Polarization::tm_like;
    } else {
        throw ParseError("optical mode: unknown polarization '" + pol + "'");
    }
    m.slot_fraction = tr.keyed("slot_fraction");
    m.residual = tr.keyed("residual");
    m.guided = tr.size("guided") != 0;
    m.ex = read_complex_grid(tr, "ex", m.ny + 1, m.nx);
    m.ey = read_complex_grid(tr, "ey", m.ny, m.nx + 1);
    m.ez = read_complex_grid(tr, "ez", m.ny + 1, m.nx + 1);
    return m;
}

void write_acoustic_mode(std::ostream& out, const AcousticMode& m) {
    out << "# slotbrillouin acoustic-mode v1\n";
    out << "nx " << m.nx << "\nny " << m.ny << '\n';
    out << "slot " << format_exact(m.slot.x0) << ' ' << format_exact(m.slot.x1) << ' ' << format_exact(m.slot.y0)
        << ' ' << format_exact(m.slot.y1) << '\n';
    out << "boundary " << to_string(m.boundary) << '\n';
    out << "order " << m.order << '\n';
    out << "wavenumber " << format_exact(m.wavenumber) << '\n';
    out << "path_radius " << format_exact(m.path_radius) << '\n';
    out << "omega " << format_exact(m.omega) << '\n';
    out << "transverse_eigenvalue " << format_exact(m.transverse_eigenvalue) << '\n';
    out << "propagating " << (m.propagating ? 1 : 0) << '\n';
    out << "sound_speed " << format_exact(m.sound_speed) << '\n';
    out << "bulk_modulus " << format_exact(m.bulk_modulus) << '\n';
    out << "zero_point_pressure " << format_exact(m.zero_point_pressure) << '\n';
    write_grid(out, "pressure", m.shape, m.ny, m.nx);
    if (m.normalized()) write_grid(out, "strain", m.strain, m.ny, m.nx);
}

AcousticMode read_acoustic_mode(std::istream& in) {
    TokenReader tr(in, "acoustic mode");
    AcousticMode m;
    m.nx = tr.size("nx");
    m.ny = tr.size("ny");
    tr.expect("slot");
    m.slot.x0 = tr.number();
    m.slot.x1 = tr.number();
    m.slot.y0 = tr.number();
    m.slot.y1 = tr.number();
    tr.expect("boundary");
    m.boundary = parse_top_boundary(tr.word());
    tr.expect("order");
    m.order = static_cast<long>(tr.integer());
    m.wavenumber = tr.keyed("wavenumber");
    m.path_radius = tr.keyed("path_radius");
    m.omega = tr.keyed("omega");
    m.transverse_eigenvalue = tr.keyed("transverse_eigenvalue");
    m.propagating = tr.size("propagating") != 0;
    m.sound_speed = tr.keyed("sound_speed");
    m.bulk_modulus = tr.keyed("bulk_modulus");
    m.zero_point_pressure = tr.keyed("zero_point_pressure");
    m.shape = read_grid(tr, "pressure", m.ny, m.nx);
    if (m.normalized()) m.strain = read_grid(tr, "strain", m.ny, m.nx);
    return m;
}

void save_mesh(const std::string& path, const Mesh2D& mesh) {
    save_file(path, [&](std::ostream& out) { write_mesh(out, mesh); });
}

void save_optical_mode(const std::string& path, const OpticalMode& mode) {
    save_file(path, [&](std::ostream& out) { write_optical_mode(out, mode); });
}

void save_acoustic_mode(const std::string& path, const AcousticMode& mode) {
    save_file(path, [&](std::ostream& out) { write_acoustic_mode(out, mode); });
}

}  // namespace slotbrillouin
