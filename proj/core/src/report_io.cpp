#include "slotbrillouin/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "slotbrillouin/constants.hpp"
#include "slotbrillouin/errors.hpp"
#include "text_util.hpp"

namespace slotbrillouin {

namespace {

std::string num(double v) { return detail::format_sci(v, 9); }

std::string sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',') c = ';';
        if (c == '\n' || c == '\r' || c == '"') c = ' ';
    }
    return s;
}

template <typename Fn>
void write_file(const std::string& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    fn(out);
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string fixed(double v, int decimals = 2) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    return std::string(buf, ptr);
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

// Tick step from {1, 2, 5} x 10^k giving roughly `target` intervals.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double f : {1.0, 2.0, 5.0, 10.0}) {
        if (f * mag >= raw) return f * mag;
    }
    return 10.0 * mag;
}

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;  // (width nm, value)
};

struct Panel {
    double left, top, width, height;
    std::string title, ylabel;
    std::vector<Series> series;
};

void draw_panel(std::ostream& out, const Panel& p, double wmin, double wmax) {
    double ymax = 0.0;
    for (const auto& s : p.series) {
        for (const auto& [x, y] : s.points) ymax = std::max(ymax, y);
    }
    if (!(ymax > 0.0)) ymax = 1.0;
    const double step = nice_step(ymax, 5);
    const double ytop = std::ceil(ymax * 1.05 / step) * step;
    const double lx0 = std::log10(wmin);
    const double lx1 = std::log10(wmax) > lx0 ? std::log10(wmax) : lx0 + 1.0;
    auto px = [&](double w) { return p.left + (std::log10(w) - lx0) / (lx1 - lx0) * p.width; };
    auto py = [&](double y) { return p.top + p.height - y / ytop * p.height; };

    out << "  <g>\n";
    out << "    <rect x=\"" << fixed(p.left) << "\" y=\"" << fixed(p.top) << "\" width=\"" << fixed(p.width)
        << "\" height=\"" << fixed(p.height) << "\" fill=\"none\" stroke=\"#000\"/>\n";
    out << "    <text x=\"" << fixed(p.left + p.width / 2) << "\" y=\"" << fixed(p.top - 12)
        << "\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(p.title) << "</text>\n";

    // y ticks
    for (double y = 0.0; y <= ytop * (1 + 1e-9); y += step) {
        const double yy = py(y);
        out << "    <line x1=\"" << fixed(p.left - 5) << "\" y1=\"" << fixed(yy) << "\" x2=\"" << fixed(p.left)
            << "\" y2=\"" << fixed(yy) << "\" stroke=\"#000\"/>\n";
        out << "    <line x1=\"" << fixed(p.left) << "\" y1=\"" << fixed(yy) << "\" x2=\""
            << fixed(p.left + p.width) << "\" y2=\"" << fixed(yy) << "\" stroke=\"#ddd\"/>\n";
        const int decimals = step >= 1.0 ? 0 : static_cast<int>(std::ceil(-std::log10(step)));
        out << "    <text x=\"" << fixed(p.left - 8) << "\" y=\"" << fixed(yy + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">" << fixed(y, decimals) << "</text>\n";
    }
    // x ticks on a log axis
    for (int e = static_cast<int>(std::floor(lx0)); e <= static_cast<int>(std::ceil(lx1)); ++e) {
        for (double f : {1.0, 2.0, 5.0}) {
            const double w = f * std::pow(10.0, e);
            if (std::log10(w) < lx0 - 1e-9 || std::log10(w) > lx1 + 1e-9) continue;
            const double xx = px(w);
            out << "    <line x1=\"" << fixed(xx) << "\" y1=\"" << fixed(p.top + p.height) << "\" x2=\"" << fixed(xx)
                << "\" y2=\"" << fixed(p.top + p.height + 5) << "\" stroke=\"#000\"/>\n";
            out << "    <text x=\"" << fixed(xx) << "\" y=\"" << fixed(p.top + p.height + 20)
                << "\" text-anchor=\"middle\" font-size=\"12\">" << fixed(w, 0) << "</text>\n";
        }
    }
    out << "    <text x=\"" << fixed(p.left + p.width / 2) << "\" y=\"" << fixed(p.top + p.height + 42)
        << "\" text-anchor=\"middle\" font-size=\"13\">slot width (nm)</text>\n";
    out << "    <text transform=\"translate(" << fixed(p.left - 52) << "," << fixed(p.top + p.height / 2)
        << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(p.ylabel) << "</text>\n";

    double legend_y = p.top + 18;
    for (const auto& s : p.series) {
        out << "    <polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < s.points.size(); ++k) {
            out << (k ? " " : "") << fixed(px(s.points[k].first)) << ',' << fixed(py(s.points[k].second));
        }
        out << "\"/>\n";
        for (const auto& [x, y] : s.points) {
            out << "    <circle cx=\"" << fixed(px(x)) << "\" cy=\"" << fixed(py(y)) << "\" r=\"3\" fill=\"" << s.color
                << "\"/>\n";
        }
        if (!s.label.empty()) {
            const double lx = p.left + p.width - 130;
            out << "    <line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(legend_y) << "\" x2=\"" << fixed(lx + 24)
                << "\" y2=\"" << fixed(legend_y) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
            out << "    <text x=\"" << fixed(lx + 30) << "\" y=\"" << fixed(legend_y + 4) << "\" font-size=\"12\">"
                << xml_escape(s.label) << "</text>\n";
            legend_y += 18;
        }
    }
    out << "  </g>\n";
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<DesignReport>& reports) {
    out << kCsvHeader << '\n';
    for (const auto& r : reports) {
        out << num(r.geometry.slot_width) << ',' << to_string(r.boundary) << ',';
        if (r.ok()) {
            out << num(r.n_eff) << ',' << num(r.eta_slot) << ',' << r.optical_order << ',' << r.acoustic_order << ','
                << num(to_hz(r.omega_b)) << ',' << num(to_hz(r.g0)) << ',' << num(to_hz(r.kappa)) << ','
                << num(r.q_acoustic) << ',' << num(to_hz(r.gamma)) << ',' << num(r.c0) << ','
                << num(r.threshold_power) << ',' << num(r.temperature) << ',' << num(r.occupancy) << ','
                << (r.resolved_sideband ? "true" : "false") << ',' << sanitize(r.status) << '\n';
        } else {
            out << ",,,,,," << num(to_hz(r.kappa)) << ',' << num(r.q_acoustic) << ",,,," << num(r.temperature)
                << ",,," << sanitize(r.status) << '\n';
        }
    }
}

void emit_csv(const std::vector<DesignReport>& reports, const std::string& path) {
    write_file(path, [&](std::ostream& out) { write_csv(out, reports); });
}

CsvTable read_csv(std::istream& in) {
    auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return fields;
    };
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("csv: empty input");
    t.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != t.header.size()) {
            throw ParseError("csv: row " + std::to_string(t.rows.size() + 1) + " has " + std::to_string(fields.size()) +
                             " fields, expected " + std::to_string(t.header.size()));
        }
        t.rows.push_back(std::move(fields));
    }
    return t;
}

bool write_svg(std::ostream& out, const std::vector<DesignReport>& reports) {
    // One point per (boundary, width): Q does not change g0 or eta.
    std::map<TopBoundary, std::map<double, const DesignReport*>> by_bc;
    for (const auto& r : reports) {
        if (!r.ok()) continue;
        by_bc[r.boundary].try_emplace(r.geometry.slot_width, &r);
    }
    std::vector<double> widths;
    for (const auto& [bc, rows] : by_bc) {
        for (const auto& [w, r] : rows) widths.push_back(w);
    }
    std::sort(widths.begin(), widths.end());
    widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
    if (widths.size() < 2) return false;

    Panel g0{90, 50, 380, 300, "(a) coupling rate", "g0/2π (kHz)", {}};
    Panel eta{590, 50, 380, 300, "(b) slot energy fraction", "η slot", {}};
    for (const auto& [bc, rows] : by_bc) {
        Series s{std::string(to_string(bc)), bc == TopBoundary::sealed ? "#1f77b4" : "#ff7f0e", {}};
        for (const auto& [w, r] : rows) s.points.emplace_back(w * 1e9, to_hz(r->g0) * 1e-3);
        g0.series.push_back(std::move(s));
    }
    Series e{"", "#222", {}};
    for (const auto& [w, r] : by_bc.begin()->second) e.points.emplace_back(w * 1e9, r->eta_slot);
    eta.series.push_back(std::move(e));

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"420\" viewBox=\"0 0 1000 420\" "
           "font-family=\"sans-serif\">\n";
    out << "  <rect width=\"1000\" height=\"420\" fill=\"#fff\"/>\n";
    draw_panel(out, g0, widths.front() * 1e9, widths.back() * 1e9);
    draw_panel(out, eta, widths.front() * 1e9, widths.back() * 1e9);
    out << "</svg>\n";
    return true;
}

bool emit_svg(const std::vector<DesignReport>& reports, const std::string& path) {
    std::ostringstream buf;
    if (!write_svg(buf, reports)) return false;
    write_file(path, [&](std::ostream& out) { out << buf.str(); });
    return true;
}

}  // namespace slotbrillouin
