#include <benchmark/benchmark.h>

#include "slotbrillouin/acoustic.hpp"
#include "slotbrillouin/capillary.hpp"
#include "slotbrillouin/coupling.hpp"
#include "slotbrillouin/optical.hpp"

namespace sb = slotbrillouin;

static sb::SlotRingGeometry geometry(double width_nm) {
    sb::SlotRingGeometry g;
    g.slot_width = width_nm * 1e-9;
    return g;
}

static void BuildMesh(benchmark::State& state) {
    const auto g = geometry(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto mesh = sb::build_mesh(g, sb::MeshSpec{});
        benchmark::DoNotOptimize(mesh);
    }
}
BENCHMARK(BuildMesh)->Arg(5)->Arg(50)->Arg(150)->Unit(benchmark::kMicrosecond);

static void AssembleOperator(benchmark::State& state) {
    const auto mesh = sb::build_mesh(geometry(static_cast<double>(state.range(0))), sb::MeshSpec{});
    for (auto _ : state) {
        auto op = sb::assemble_operator(mesh, sb::kDefaultWavelength);
        benchmark::DoNotOptimize(op);
    }
    state.counters["cells"] = static_cast<double>(mesh.cell_count());
}
BENCHMARK(AssembleOperator)->Arg(5)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

static void OpticalSolve(benchmark::State& state) {
    const auto mesh = sb::build_mesh(geometry(static_cast<double>(state.range(0))), sb::MeshSpec{});
    const auto op = sb::assemble_operator(mesh, sb::kDefaultWavelength);
    for (auto _ : state) {
        auto modes = sb::solve_modes(op, 2.0, 2);
        benchmark::DoNotOptimize(modes);
    }
}
BENCHMARK(OpticalSolve)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond)->Iterations(3);

static void AcousticSolve(benchmark::State& state) {
    const auto g = geometry(50);
    sb::AcousticMeshSpec spec;
    spec.ny = static_cast<int>(state.range(0));
    spec.nx = spec.ny / 5;
    for (auto _ : state) {
        auto mode = sb::solve_acoustic_mode(g, g.slot_fill, 372, sb::TopBoundary::open, spec);
        benchmark::DoNotOptimize(mode);
    }
}
BENCHMARK(AcousticSolve)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

static void CouplingIntegral(benchmark::State& state) {
    const auto g = geometry(50);
    const auto mesh = sb::build_mesh(g, sb::MeshSpec{});
    const auto optical = sb::solve_modes(sb::assemble_operator(mesh, sb::kDefaultWavelength), 2.0, 1).front();
    auto acoustic = sb::solve_acoustic_mode(g, g.slot_fill, 372, sb::TopBoundary::sealed);
    sb::zero_point_normalize(acoustic, g.slot_fill.acoustics().bulk_modulus);
    for (auto _ : state) {
        auto r = sb::coupling_rate(optical, acoustic, mesh, g.slot_fill.permittivity);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(CouplingIntegral)->Unit(benchmark::kMicrosecond);

static void CapillaryRoot(benchmark::State& state) {
    sb::CapillaryModel m;
    for (auto _ : state) {
        auto t = sb::fill_transition_thickness(m);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(CapillaryRoot);
BENCHMARK_MAIN();
