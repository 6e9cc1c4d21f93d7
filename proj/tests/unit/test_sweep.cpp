#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "slotbrillouin/report_io.hpp"
#include "slotbrillouin/sweep.hpp"

using namespace slotbrillouin;

namespace {

SweepConfig small_config() {
    SweepConfig c;
    c.widths = {20e-9, 60e-9};
    c.acoustic_q = {1e4, 1e5};
    return c;
}

OpticalMode synthetic(double n_eff, Polarization pol, bool guided, bool even) {
    OpticalMode m;
    m.nx = 4;
    m.ny = 1;
    m.n_eff = n_eff;
    m.polarization = pol;
    m.guided = guided;
    const double s = even ? 1.0 : -1.0;
    m.ex = {1.0, 2.0, 2.0 * s, 1.0 * s, 1.0, 2.0, 2.0 * s, 1.0 * s};
    return m;
}

std::string csv(const std::vector<DesignReport>& rows) {
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

}  // namespace

TEST(PickSlotMode, HighestGuidedEvenTeMode) {
    std::vector<OpticalMode> modes{
        synthetic(2.6, Polarization::te_like, true, false),   // odd: the antisymmetric supermode
        synthetic(2.5, Polarization::tm_like, true, true),
        synthetic(1.9, Polarization::te_like, true, true),
        synthetic(2.1, Polarization::te_like, true, true),
        synthetic(2.7, Polarization::te_like, false, true),
    };
    EXPECT_EQ(pick_slot_mode(modes), 3u);
    modes.erase(modes.begin() + 2, modes.begin() + 4);
    EXPECT_FALSE(pick_slot_mode(modes).has_value());
    EXPECT_FALSE(pick_slot_mode({}).has_value());
}

TEST(ResolveWorkers, Clamps) {
    EXPECT_EQ(resolve_workers(4, 2), 2u);
    EXPECT_EQ(resolve_workers(1, 20), 1u);
    EXPECT_EQ(resolve_workers(3, 0), 1u);
    EXPECT_GE(resolve_workers(0, 100), 1u);
}

TEST(Sweep, RowOrderAndDeterminism) {
    auto cfg = small_config();
    cfg.workers = 1;
    std::vector<std::string> lines;
    const auto serial = run_sweep(cfg, [&](const std::string& s) { lines.push_back(s); });
    ASSERT_EQ(serial.size(), 2u * 2u * 2u);
    EXPECT_FALSE(lines.empty());
    std::size_t k = 0;
    for (double w : cfg.widths) {
        for (auto bc : cfg.boundaries) {
            for (double q : cfg.acoustic_q) {
                const auto& r = serial[k++];
                EXPECT_EQ(r.geometry.slot_width, w);
                EXPECT_EQ(r.boundary, bc);
                EXPECT_EQ(r.q_acoustic, q);
                EXPECT_TRUE(r.ok()) << r.status;
                EXPECT_GT(r.g0, 0.0);
                EXPECT_LT(r.strain_energy_error, 1e-6);
                EXPECT_GT(r.g0 / r.g0_uniform_estimate, 1.0 / 3.0);
                EXPECT_LT(r.g0 / r.g0_uniform_estimate, 3.0);
            }
        }
    }
    // Q changes only the linewidth-dependent columns.
    EXPECT_EQ(serial[0].g0, serial[1].g0);
    EXPECT_NEAR(serial[1].c0 / serial[0].c0, 10.0, 1e-9);

    cfg.workers = 2;
    EXPECT_EQ(csv(run_sweep(cfg)), csv(serial));
}

TEST(Sweep, FailuresAreRecordedPerWidth) {
    auto cfg = small_config();
    cfg.boundaries = {TopBoundary::open};
    cfg.acoustic_q = {1e5};
    MeshSpec spec = cfg.mesh;
    SlotRingGeometry narrow = cfg.geometry;
    narrow.slot_width = cfg.widths[0];
    SlotRingGeometry wide = cfg.geometry;
    wide.slot_width = cfg.widths[1];
    const auto n_narrow = build_mesh(narrow, spec).cell_count();
    const auto n_wide = build_mesh(wide, spec).cell_count();
    ASSERT_NE(n_narrow, n_wide);
    cfg.mesh.cell_budget = std::min(n_narrow, n_wide);

    const auto rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 2u);
    const std::size_t bad = n_narrow > n_wide ? 0 : 1;
    EXPECT_FALSE(rows[bad].ok());
    EXPECT_EQ(rows[bad].status.rfind("error: ", 0), 0u);
    EXPECT_NE(rows[bad].status.find("budget"), std::string::npos);
    EXPECT_EQ(rows[bad].geometry.slot_width, cfg.widths[bad]);
    EXPECT_TRUE(rows[1 - bad].ok()) << rows[1 - bad].status;
}
