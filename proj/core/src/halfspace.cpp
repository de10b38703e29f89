#include "oparax/halfspace.hpp"

#include <cmath>
#include <sstream>

#include "oparax/parallel.hpp"

namespace oparax {

namespace {

// Datum must have decayed at the line edges; the transform is periodic and
// wrap-around re-enters from the other side otherwise.
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

}  // namespace

BoundaryData g_from_uin(const BoundaryData& uin, const PhysicalParams& p) {
  validate_params(p);
  Spectrum s = forward_dft(uin.samples, uin.grid);
  // g^ = (1 + (i eps ky / 2)(i eta)) u_in^ = (1 - eps ky eta / 2) u_in^
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    const double eta = s.grid.frequency(k);
    s.coeffs[k] *= 1.0 - 0.5 * p.epsilon * p.ky * eta;
  }
  return BoundaryData(uin.grid, inverse_dft(s), BoundaryKind::g,
                      uin.support_lo);
}

HalfSpaceSolution solve_halfspace(const BoundaryData& g, const Grid1D& xgrid,
                                  const PhysicalParams& p, unsigned threads) {
  validate_params(p);
  p.require_nonzero_ky("solve_halfspace");
  if (xgrid.origin() != 0.0)
    fail(errc::invalid_argument, "solve_halfspace: xgrid must start at 0");

  std::vector<std::string> warnings;
  check_edges(g, warnings);

  Spectrum ghat = forward_dft(g.samples, g.grid);
  SymbolTable table(p, ghat.grid);

  std::vector<cplx> trace_coeffs(ghat.coeffs.size());
  for (std::size_t k = 0; k < trace_coeffs.size(); ++k)
    trace_coeffs[k] = table.m_entrance()[k] * ghat.coeffs[k];
  Spectrum trace_hat(ghat.grid, trace_coeffs);

  ComplexField2D field(xgrid, g.grid);
  const std::span<const cplx> rminus = table.r_minus();
  parallel_for(xgrid.size(), threads, [&](std::size_t ix) {
    const double x = xgrid.point(ix);
    std::vector<cplx> slice(trace_coeffs.size());
    for (std::size_t k = 0; k < slice.size(); ++k)
      slice[k] = trace_coeffs[k] * std::exp(rminus[k] * x);
    const std::vector<cplx> row = inverse_dft(Spectrum(ghat.grid, slice));
    std::copy(row.begin(), row.end(), field.row(ix).begin());
  });
  field.check_finite("solve_halfspace");

  BoundaryData trace0(g.grid, inverse_dft(trace_hat), BoundaryKind::g,
                      g.support_lo);
  return HalfSpaceSolution{std::move(field), std::move(trace0),
                           std::move(table), std::move(ghat),
                           std::move(trace_hat), std::move(warnings)};
}

}  // namespace oparax
