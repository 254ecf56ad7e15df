#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fracfem/analysis.hpp"
#include "fracfem/fem_core.hpp"
#include "fracfem/special_functions.hpp"
#include "fracfem/spectral.hpp"
#include "fracfem/timestep_l1.hpp"

namespace {

using namespace fracfem;

// Arg(0): |z| * 100, spans the Taylor, integral and asymptotic regions.
void BM_MittagLeffler(benchmark::State& state) {
  const double z = -static_cast<double>(state.range(0)) / 100.0;
  const MlParams p{0.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(p, z));
}
BENCHMARK(BM_MittagLeffler)->Arg(50)->Arg(500)->Arg(5000)->Arg(100000);

void BM_MittagLefflerSweep(benchmark::State& state) {
  std::vector<double> zs;
  for (int i = 0; i < 256; ++i) zs.push_back(-std::pow(10.0, -3.0 + 8.0 * i / 255.0));
  const MlParams p{static_cast<double>(state.range(0)) / 100.0, 1.0};
  for (auto _ : state) {
    double acc = 0.0;
    for (double z : zs) acc += mittag_leffler(p, z);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(zs.size()));
}
BENCHMARK(BM_MittagLefflerSweep)->Arg(10)->Arg(50)->Arg(95);

void BM_Eigensystem(benchmark::State& state) {
  const Mesh1D mesh(static_cast<int>(state.range(0)));
  const auto k = CoefficientField::sinusoidal();
  for (auto _ : state) benchmark::DoNotOptimize(build_eigensystem(mesh, k, MassKind::consistent));
}
BENCHMARK(BM_Eigensystem)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_HomogeneousSolve(benchmark::State& state) {
  const Mesh1D mesh(static_cast<int>(state.range(0)));
  const auto eig = build_eigensystem(mesh, CoefficientField::constant(1.0), MassKind::lumped);
  const Example ex = example_from_string("b");
  const auto v = initial_projection(mesh, ex, Projection::ritz);
  for (auto _ : state) benchmark::DoNotOptimize(homogeneous_solve(eig, v, 0.5, 0.1));
}
BENCHMARK(BM_HomogeneousSolve)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_L1Solve(benchmark::State& state) {
  const Mesh1D mesh(64);
  const auto k = CoefficientField::constant(1.0);
  const auto stiff = assemble_stiffness(mesh, k);
  const auto mass = assemble_mass(mesh, MassKind::lumped);
  const Example ex = example_from_string("a");
  const auto v = initial_projection(mesh, ex, Projection::ritz);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(l1_solve(stiff, mass, 0.5, 1.0 / steps, v, steps));
}
BENCHMARK(BM_L1Solve)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
