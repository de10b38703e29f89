#ifndef OPARAX_DIAGNOSTICS_HPP
#define OPARAX_DIAGNOSTICS_HPP

#include <span>
#include <vector>

#include "oparax/field.hpp"
#include "oparax/halfspace.hpp"
#include "oparax/quadrant.hpp"

namespace oparax {

// Both energy identities of the half-space problem, evaluated on a truncated
// domain. Identity 1 balances absorption plus entrance outflux against the
// incoming terms; identity 2 balances absorption plus the trace norm against
// the incoming-envelope flux.
struct EnergyReport {
  double absorbed = 0.0;   // 2 nu double-integral |u|^2 over [0, xmax] x R
  double outgoing = 0.0;   // entrance outflux (1/(8 kx)) ||(i eps D - 2 kx) u0||^2
  double incoming = 0.0;   // kx ||u0||^2 + (kx/2) ||g||^2
  double lhs1 = 0.0, rhs1 = 0.0, relative_residual1 = 0.0;
  double lhs2 = 0.0, rhs2 = 0.0, relative_residual2 = 0.0;
  double xmax = 0.0;            // last slice actually integrated
  double tail_fraction = 0.0;   // estimated absorbed mass beyond xmax
};

// x-integrals use the trapezoid rule over the slices with x <= xmax;
// boundary integrals are evaluated spectrally (Parseval), with the trace
// x-derivative realized by the R_- multiplier and d_x u_in = 0.
// Throws truncation_too_short when the estimated tail beyond xmax exceeds
// 1e-4 of the total absorbed energy.
EnergyReport energy_balance(const HalfSpaceSolution& sol,
                            const BoundaryData& uin, const PhysicalParams& p,
                            double xmax);

struct StabilityResult {
  double ratio = 0.0;   // sup over slices of ||u^(x)|| / ||g||_{H^{-1/2}}
  double bound = 0.0;   // 2 sqrt(1 + kx^2/(eps |ky|))
  double margin = 0.0;  // bound - ratio
};

// ratio = sup_x sqrt(sum |u^(x, eta_j)|^2 deta)
//              / sqrt(sum |g^(eta_j)|^2 (1+eta_j^2)^{-1/2} deta),
// measured from the solved field rows, 0 for vanishing data. The bound holds
// as a hard inequality (no tolerance).
StabilityResult stability_ratio(const HalfSpaceSolution& sol,
                                const BoundaryData& g,
                                const PhysicalParams& p);

// max over x-slices of ||(U - u)(x, .)||_{L^2(y>=0)} divided by the largest
// slice norm of u on y >= 0. Requires matching grids.
double transparency_error(const QuadrantSolution& U,
                          const HalfSpaceSolution& u);

struct DecayRow {
  double A = 0.0;      // shift actually applied (snapped to the grid)
  double err = 0.0;    // max over x of ||(u^A - U^A) 1_{y>=0}||_{L^2}
  double bound = 0.0;  // C_K ||H 1_{y <= -A}||_{L^2}
};

struct DecayTable {
  std::vector<DecayRow> rows;
  double c_k = 0.0;  // sup over the grid of |K^|

  // err <= bound*(1+tol) and err nonincreasing up to the same slack.
  bool satisfies(double tol) const;
};

// Shifted-data study for the absorbing orientation (ky < 0): for each shift A
// (snapped to an integer grid multiple) solves both problems with the datum
// translated by A and tabulates the restriction error against the bound
// C_K ||H 1_{y<=-A}|| with H = F^{-1}(M h^). Requires h supported in y > 0.
DecayTable absorbing_decay(const BoundaryData& h, std::span<const double> shifts,
                           const Grid1D& xgrid, const PhysicalParams& p,
                           unsigned threads = 1);

// ||k.grad u||_{L^2} / ||u||_{L^2}, gradient spectral in y and via R_- in x;
// O(eps + nu) small in the paraxial regime. 0 for vanishing data.
double paraxiality_measure(const HalfSpaceSolution& sol,
                           const PhysicalParams& p);

// ||trace 1_{y<0}|| / ||trace||: for ky > 0 and data supported in y > 0 the
// trace is itself supported in y >= 0, so the ratio measures only grid
// leakage. Throws wrong_sign_ky for ky <= 0.
double hardy_support_check(const BoundaryData& trace, const PhysicalParams& p);

// (1/2pi) sum |g^_j|^2 (1+eta_j^2)^s |R_-(i eta_j)|^{2m} / |Re R_-(i eta_j)|
// * deta. Finite for nu > 0; grows without bound as nu -> 0. Diagnostic only.
double weighted_spectrum_norms(const BoundaryData& g, const PhysicalParams& p,
                               double s, unsigned m);

}  // namespace oparax

#endif
