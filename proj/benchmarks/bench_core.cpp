//============================================================================
// Microbenchmarks for the hot paths: DFT round trips, symbol tables, the
// half-space solve and the O(n^2) Abel quadrature.
//============================================================================

#include <benchmark/benchmark.h>

#include "oparax/oparax.hpp"

namespace {

using namespace oparax;

PhysicalParams params() {
  return PhysicalParams::from_direction(0.1, std::numbers::sqrt2 / 2.0,
                                        std::numbers::sqrt2 / 2.0, 0.5);
}

void BM_forward_dft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid1D grid(n, -0.5 * static_cast<double>(n) * 0.0625, 0.0625);
  const BoundaryData g =
      BoundaryData::gaussian(grid, BoundaryKind::g, 0.0, 1.0, 1.0);
  for (auto _ : state) {
    const Spectrum s = forward_dft(g.samples, grid);
    benchmark::DoNotOptimize(s.coeffs.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(n));
}
BENCHMARK(BM_forward_dft)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_symbol_table(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid1D grid(n, -0.5 * static_cast<double>(n) * 0.0625, 0.0625);
  const SpectralGrid sg(grid);
  const PhysicalParams p = params();
  for (auto _ : state) {
    SymbolTable table(p, sg);
    benchmark::DoNotOptimize(table.r_minus().data());
  }
}
BENCHMARK(BM_symbol_table)->Arg(1024)->Arg(4096);

void BM_solve_halfspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid1D ygrid(n, -0.5 * static_cast<double>(n) * 0.0625, 0.0625);
  const Grid1D xgrid(64, 0.0, 0.125);
  const BoundaryData g =
      BoundaryData::gaussian(ygrid, BoundaryKind::g, 0.0, 1.0, 1.0);
  const PhysicalParams p = params();
  for (auto _ : state) {
    const HalfSpaceSolution sol = solve_halfspace(g, xgrid, p);
    benchmark::DoNotOptimize(sol.field.values().data());
  }
}
BENCHMARK(BM_solve_halfspace)->Arg(512)->Arg(2048);

void BM_half_derivative_abel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid1D line(n, 0.0, 1.0 / 32.0);
  std::vector<cplx> samples(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double x = line.point(m);
    samples[m] = std::exp(-0.5 * (x - 6.0) * (x - 6.0));
  }
  const HalfLineSignal f(line, std::move(samples));
  for (auto _ : state) {
    const HalfLineSignal h = half_derivative_abel(f);
    benchmark::DoNotOptimize(h.samples.data());
  }
}
BENCHMARK(BM_half_derivative_abel)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
