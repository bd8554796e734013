#include "pettylab/geometry/shapes.hpp"
#include "pettylab/orlicz/projection.hpp"
#include "pettylab/symmetrize/symmetrize.hpp"

#include <benchmark/benchmark.h>

using namespace pettylab;
using kernels::Exec;

namespace {

struct Atoms {
  std::vector<Vec> normals;
  std::vector<double> weights;
};

Atoms atoms_of(const Polytope& k) {
  Atoms a;
  for (const auto& f : k.facets()) {
    a.normals.push_back(f.normal);
    a.weights.push_back(0.5 * f.area);
  }
  return a;
}

Exec exec_of(const benchmark::State& s) { return s.range(1) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& s) { s.SetLabel(s.range(1) == 0 ? "serial" : "omp"); }

void BM_ZonoidSupport(benchmark::State& state) {
  const auto k = ball_polytope(3, static_cast<int>(state.range(0)));
  const auto a = atoms_of(k);
  const auto grid = spherical_grid(3, 8192);
  std::vector<double> out(grid.size());
  for (auto _ : state) {
    kernels::zonoid_support(a.normals, a.weights, grid.directions, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
  label(state);
}

void BM_LpNorm(benchmark::State& state) {
  const auto k = ball_polytope(3, static_cast<int>(state.range(0)));
  const auto a = atoms_of(k);
  const auto grid = spherical_grid(3, 8192);
  std::vector<double> out(grid.size());
  for (auto _ : state) {
    kernels::lp_norm(a.normals, a.weights, 3.0, grid.directions, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
  label(state);
}

void BM_PolarVolumeByRoots(benchmark::State& state) {
  const auto k = ball_polytope(2, static_cast<int>(state.range(0)));
  const auto phi = orlicz::Phi::asymmetric_power(2.0, 3.0, 0.5);
  const auto grid = spherical_grid(2, 4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orlicz::polar_volume_by_roots(k, phi, grid, exec_of(state)).value);
  }
  label(state);
}

void BM_Steiner3d(benchmark::State& state) {
  Rng rng(1);
  const auto k = random_polytope(3, static_cast<int>(state.range(0)), true, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sym::steiner_3d(k, Vec(0.3, 0.4, 0.866).normalized(),
                                             sym::kDefaultSteinerGrid, exec_of(state))
                                 .volume());
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_ZonoidSupport)->ArgsProduct({{500, 2000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LpNorm)->ArgsProduct({{500, 2000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolarVolumeByRoots)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Steiner3d)->ArgsProduct({{30, 120}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
