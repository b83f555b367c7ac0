#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "glstep/strip2d.hpp"

using namespace glstep;

namespace {

StripDisc disc_of(double R, double m, double h) {
  StripDisc d;
  d.a = -1.0;
  d.b = 1.2;
  d.R = R;
  d.m = m;
  d.hx = d.hy = h;
  return d;
}

void kernel(benchmark::State& state, Kernel k) {
  const StripLattice lat(disc_of(static_cast<double>(state.range(0)), 6.0, 0.05));
  std::vector<double> x(lat.unknowns()), g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.3 * std::sin(0.01 * static_cast<double>(i));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lat.energy_and_gradient(x, g, k));
    benchmark::ClobberMemory();
  }
  state.counters["nodes"] = static_cast<double>(x.size() / 2);
}

void BM_KernelSerial(benchmark::State& s) { kernel(s, Kernel::Serial); }
void BM_KernelParallel(benchmark::State& s) { kernel(s, Kernel::Parallel); }

void BM_Precondition(benchmark::State& state) {
  const StripLattice lat(disc_of(static_cast<double>(state.range(0)), 6.0, 0.05));
  std::vector<double> x(lat.unknowns(), 1.0), y(x.size());
  for (auto _ : state) {
    lat.precondition(x, y);
    benchmark::ClobberMemory();
  }
}

void solve(benchmark::State& state, Kernel k) {
  const StripDisc d = disc_of(8.0, 4.0, 0.1);
  const DispersionCurve c = beta(-1.0);
  StripOptions o;
  o.kernel = k;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_strip(d, c, o).energy);
}

void BM_SolveSerial(benchmark::State& s) { solve(s, Kernel::Serial); }
void BM_SolveParallel(benchmark::State& s) { solve(s, Kernel::Parallel); }

}  // namespace

BENCHMARK(BM_KernelSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_KernelParallel)->Arg(8)->Arg(16);
BENCHMARK(BM_Precondition)->Arg(8)->Arg(16);
BENCHMARK(BM_SolveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
