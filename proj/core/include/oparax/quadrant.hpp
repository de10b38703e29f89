#ifndef OPARAX_QUADRANT_HPP
#define OPARAX_QUADRANT_HPP

#include <string>
#include <vector>

#include "oparax/dft.hpp"
#include "oparax/field.hpp"
#include "oparax/symbols.hpp"

namespace oparax {

// Solution of the quadrant problem (x >= 0, y >= 0) under the transparent /
// absorbing condition at y = 0. Built in one pass:
//   (1) the datum g_plus, already zero at y <= 0, lives on the full y-line;
//   (2) u0 = F^{-1}(M g^), the half-space trace;
//   (3) w = u0 * 1_{y>=0} (sharp cutoff, y = 0 included);
//   (4) slice spectra (K^ F(w) + G^) exp(R_- x);
//   (5) restriction to y >= 0.
// For ky > 0 this reproduces the restricted half-space solution exactly.
struct QuadrantSolution {
  ComplexField2D field;       // x >= 0, y >= 0
  std::vector<cplx> trace0;   // U(0, y) samples, y >= 0
  Grid1D ygrid_full;          // symmetric full-line grid used internally
  SymbolTable symbols;
  Spectrum g_hat;             // full-line datum spectrum
  std::vector<std::string> warnings;
};

// gp must have kind g_plus on a symmetric y-grid (y0 = -(ny/2) dy, so y = 0
// is a grid point and the y >= 0 half is a power-of-two line).
QuadrantSolution solve_quadrant(const BoundaryData& gp, const Grid1D& xgrid,
                                const PhysicalParams& p, unsigned threads = 1);

// Relative L^2(y >= 0) defect of the x = 0 trace equation
//   U0 = F^{-1}(K^ F(U0 * 1_{y>=0}) + G^),
// near zero for valid solutions (0 when the trace vanishes).
double trace_equation_residual(const QuadrantSolution& sol,
                               const BoundaryData& gp,
                               const PhysicalParams& p);

}  // namespace oparax

#endif
