#ifndef OPARAX_HALFSPACE_HPP
#define OPARAX_HALFSPACE_HPP

#include <string>
#include <vector>

#include "oparax/dft.hpp"
#include "oparax/field.hpp"
#include "oparax/symbols.hpp"

namespace oparax {

// Exact solution of the tilted-frame problem on x >= 0, y in R:
// slice spectra are F_y(u; x, eta) = M(eta) g^(eta) exp(R_-(i eta) x).
struct HalfSpaceSolution {
  ComplexField2D field;   // x >= 0, full y-line
  BoundaryData trace0;    // u(0, y)
  SymbolTable symbols;
  Spectrum g_hat;         // spectrum of the boundary datum g
  Spectrum trace_hat;     // M * g^
  std::vector<std::string> warnings;
};

// Boundary datum from the incoming envelope (a function of y only):
//   g = u_in + (i eps ky / 2) d_y u_in, derivative taken spectrally.
BoundaryData g_from_uin(const BoundaryData& uin, const PhysicalParams& p);

// xgrid must start at 0. Emits an EdgeLeak warning when the datum has not
// decayed below 1e-12 of its peak at the y-grid edges. threads parallelizes
// the independent x-slices; results are bit-identical for any thread count.
HalfSpaceSolution solve_halfspace(const BoundaryData& g, const Grid1D& xgrid,
                                  const PhysicalParams& p,
                                  unsigned threads = 1);

}  // namespace oparax

#endif
