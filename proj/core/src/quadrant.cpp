#include "oparax/quadrant.hpp"

#include <cmath>
#include <sstream>

#include "oparax/parallel.hpp"
#include "oparax/symbols.hpp"

namespace oparax {

namespace {

void check_edges(const BoundaryData& g, std::vector<std::string>& warnings) {
  const double peak = g.max_abs();
  if (peak == 0.0) return;
  const double edge =
      std::max(std::abs(g.samples.front()), std::abs(g.samples.back()));
  if (edge > 1e-12 * peak) {
    std::ostringstream os;
    os << "EdgeLeak: datum magnitude " << edge << " at the y-grid edge exceeds "
       << "1e-12 of the peak " << peak;
    warnings.push_back(os.str());
  }
}

// The cutoff 1_{y>=0} needs y=0 to be a grid point, i.e. the line must be
// symmetric: y0 = -(n/2) dy.
void require_symmetric(const Grid1D& grid) {
  const double want = -0.5 * static_cast<double>(grid.size()) * grid.spacing();
  if (std::abs(grid.origin() - want) > 1e-12 * std::abs(want))
    fail(errc::invalid_argument,
         "quadrant y-grid must be symmetric about 0 (y0 = -n/2 * dy)");
}

}  // namespace

QuadrantSolution solve_quadrant(const BoundaryData& gp, const Grid1D& xgrid,
                                const PhysicalParams& p, unsigned threads) {
  validate_params(p);
  p.require_nonzero_ky("solve_quadrant");
  if (gp.kind != BoundaryKind::g_plus)
    fail(errc::invalid_argument,
         "solve_quadrant expects a datum of kind g_plus");
  if (xgrid.origin() != 0.0)
    fail(errc::invalid_argument, "solve_quadrant: xgrid must start at 0");
  require_symmetric(gp.grid);

  std::vector<std::string> warnings;
  check_edges(gp, warnings);

  const std::size_t n = gp.grid.size();
  const std::size_t half = n / 2;

  Spectrum ghat = forward_dft(gp.samples, gp.grid);
  SymbolTable table(p, ghat.grid);

  // Modified datum spectrum and the full-line entrance trace.
  std::vector<cplx> gmod(n);
  std::vector<cplx> u0hat(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double eta = ghat.grid.frequency(k);
    gmod[k] = g_hat(ghat.coeffs[k], eta, p);
    u0hat[k] = table.m_entrance()[k] * ghat.coeffs[k];
  }
  const std::vector<cplx> u0 = inverse_dft(Spectrum(ghat.grid, u0hat));

  // Sharp cutoff of the trace to y >= 0 (grid point y_{n/2} = 0 included).
  std::vector<cplx> w(n, cplx{0.0, 0.0});
  for (std::size_t m = half; m < n; ++m) w[m] = u0[m];
  const Spectrum what = forward_dft(w, gp.grid);

  std::vector<cplx> coeff0(n);
  for (std::size_t k = 0; k < n; ++k)
    coeff0[k] = table.k_hat()[k] * what.coeffs[k] + gmod[k];
  const std::vector<cplx> trace_full = inverse_dft(Spectrum(ghat.grid, coeff0));
  std::vector<cplx> trace0(trace_full.begin() + static_cast<std::ptrdiff_t>(half),
                           trace_full.end());

  const Grid1D upper(half, 0.0, gp.grid.spacing());
  ComplexField2D field(xgrid, upper);
  const std::span<const cplx> rminus = table.r_minus();
  parallel_for(xgrid.size(), threads, [&](std::size_t ix) {
    const double x = xgrid.point(ix);
    std::vector<cplx> slice(n);
    for (std::size_t k = 0; k < n; ++k)
      slice[k] = coeff0[k] * std::exp(rminus[k] * x);
    const std::vector<cplx> row = inverse_dft(Spectrum(ghat.grid, slice));
    std::copy(row.begin() + static_cast<std::ptrdiff_t>(half), row.end(),
              field.row(ix).begin());
  });
  field.check_finite("solve_quadrant");

  return QuadrantSolution{std::move(field),  std::move(trace0),
                          gp.grid,           std::move(table),
                          std::move(ghat),   std::move(warnings)};
}

double trace_equation_residual(const QuadrantSolution& sol,
                               const BoundaryData& gp,
                               const PhysicalParams& p) {
  validate_params(p);
  if (gp.grid != sol.ygrid_full)
    fail(errc::grid_mismatch,
         "trace_equation_residual: datum grid differs from solution grid");
  const std::size_t n = gp.grid.size();
  const std::size_t half = n / 2;
  if (sol.trace0.size() != half)
    fail(errc::grid_mismatch, "trace_equation_residual: malformed trace");

  // Extend the y >= 0 trace by zero; that zero extension IS U0 1_{y>=0}.
  std::vector<cplx> cut(n, cplx{0.0, 0.0});
  for (std::size_t m = half; m < n; ++m) cut[m] = sol.trace0[m - half];

  const Spectrum ghat = forward_dft(gp.samples, gp.grid);
  const Spectrum what = forward_dft(cut, gp.grid);
  std::vector<cplx> rhs_hat(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double eta = ghat.grid.frequency(k);
    rhs_hat[k] =
        sol.symbols.k_hat()[k] * what.coeffs[k] + g_hat(ghat.coeffs[k], eta, p);
  }
  const std::vector<cplx> rhs = inverse_dft(Spectrum(ghat.grid, rhs_hat));

  double num = 0.0, den = 0.0;
  for (std::size_t m = half; m < n; ++m) {
    num += std::norm(cut[m] - rhs[m]);
    den += std::norm(cut[m]);
  }
  if (den == 0.0) return std::sqrt(num * gp.grid.spacing());
  return std::sqrt(num / den);
}

}  // namespace oparax
