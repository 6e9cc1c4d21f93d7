#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "slotbrillouin/metrics.hpp"

namespace slotbrillouin {

inline constexpr std::string_view kCsvHeader =
    "width_m,bc,n_eff,eta_slot,m_opt,m_ac,omega_B_Hz,g0_Hz,kappa_Hz,Q_ac,Gamma_Hz,C0,P_th_W,T_K,n_m,"
    "sideband_resolved,status";

/// One header line plus one line per report. Rates are written as
/// frequencies (value / 2 pi, Hz); numbers in scientific notation with nine
/// significant digits; LF line endings. Failed rows keep width and boundary
/// and leave the other numeric fields empty.
void write_csv(std::ostream& out, const std::vector<DesignReport>& reports);
void emit_csv(const std::vector<DesignReport>& reports, const std::string& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Splits the emitted format back into fields (no quoting is ever produced).
CsvTable read_csv(std::istream& in);

/// Two-panel plot: g0/2pi against slot width per boundary tag, and eta_slot
/// against slot width. Returns false (and writes nothing) when fewer than two
/// distinct widths have successful rows.
bool write_svg(std::ostream& out, const std::vector<DesignReport>& reports);
bool emit_svg(const std::vector<DesignReport>& reports, const std::string& path);

}  // namespace slotbrillouin
