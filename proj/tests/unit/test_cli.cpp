#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "slotbrillouin/field_io.hpp"
#include "slotbrillouin/report_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("slotbrillouin_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Run run(const std::string& args) {
    const auto err_path = scratch() / "stderr.txt";
    const std::string cmd = std::string(SLOTBRILLOUIN_CLI_PATH) + " " + args + " 2>" + err_path.string();
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
}

fs::path write_config(const std::string& name, const std::string& text) {
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST(Cli, MetricsDefaults) {
    const auto r = run("metrics");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("6.250000000e-02"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("sideband_resolved      false"), std::string::npos) << r.out;
}

TEST(Cli, Capillary) {
    const auto r = run("capillary --film-thickness 2e-9");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("transition"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("filled                 yes"), std::string::npos) << r.out;
}

TEST(Cli, ConfigErrorsExitTwo) {
    const auto typo = write_config("typo.json", R"({"geometry": {"slott_width_m": 5e-8}})");
    auto r = run("--config " + typo.string() + " sweep");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("slot_width_m"), std::string::npos) << r.err;

    EXPECT_EQ(run("sweep --no-such-flag").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("acoustic-mode --order 100 --bc sideways").code, 2);
}

TEST(Cli, IoErrorsExitThree) {
    EXPECT_EQ(run("--config /nonexistent/config.json sweep").code, 3);
    const auto cfg = write_config("one.json", R"({"widths_m": [6e-8], "boundaries": ["open"], "acoustic_q": [1e5]})");
    EXPECT_EQ(run("--config " + cfg.string() + " --out-csv /nonexistent-dir/out.csv sweep").code, 3);
}

TEST(Cli, AllRowsFailedExitsOne) {
    const auto cfg = write_config("tiny.json", R"({"widths_m": [2e-8, 6e-8], "mesh": {"cell_budget": 1000}})");
    const auto r = run("--config " + cfg.string() + " sweep");
    EXPECT_EQ(r.code, 1) << r.err;
    std::istringstream in(r.out);
    const auto t = slotbrillouin::read_csv(in);
    EXPECT_EQ(t.rows.size(), 2u * 2u * 3u);
    for (const auto& row : t.rows) EXPECT_EQ(row.back().rfind("error: ", 0), 0u);
}

TEST(Cli, SweepWritesCsvAndSvg) {
    const auto cfg = write_config("two.json", R"({"widths_m": [3e-8, 6e-8], "acoustic_q": [1e5]})");
    const auto csv = scratch() / "out.csv";
    const auto svg = scratch() / "out.svg";
    const auto r = run("--config " + cfg.string() + " --out-csv " + csv.string() + " --out-svg " + svg.string() +
                       " --workers 2 --verbose sweep");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("effective configuration"), std::string::npos);
    const auto text = slurp(csv);
    EXPECT_EQ(text.rfind(std::string(slotbrillouin::kCsvHeader) + "\n", 0), 0u);
    std::istringstream in(text);
    EXPECT_EQ(slotbrillouin::read_csv(in).rows.size(), 4u);
    EXPECT_NE(slurp(svg).find("</svg>"), std::string::npos);
}

TEST(Cli, EnvironmentSetsOutputPath) {
    const auto cfg = write_config("env.json", R"({"widths_m": [6e-8], "boundaries": ["sealed"], "acoustic_q": [1e4]})");
    const auto csv = scratch() / "env.csv";
    const auto r = run("--config " + cfg.string() + " sweep");
    ASSERT_EQ(r.code, 0);
    const auto env = "SLOTBRILLOUIN_OUT_CSV=" + csv.string() + " ";
    const int code = std::system((env + SLOTBRILLOUIN_CLI_PATH + " --config " + cfg.string() + " sweep").c_str());
    EXPECT_EQ(WEXITSTATUS(code), 0);
    EXPECT_EQ(slurp(csv), r.out);
}

TEST(Cli, AcousticDumpRoundTrips) {
    const auto dump = scratch() / "pressure.txt";
    const auto r = run("acoustic-mode --order 372 --bc open --dump " + dump.string());
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("p_zp"), std::string::npos);
    std::ifstream in(dump);
    const auto mode = slotbrillouin::read_acoustic_mode(in);
    EXPECT_EQ(mode.order, 372);
    EXPECT_EQ(mode.boundary, slotbrillouin::TopBoundary::open);
    EXPECT_TRUE(mode.normalized());
}
