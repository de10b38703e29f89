#ifndef OPARAX_SYMBOLS_HPP
#define OPARAX_SYMBOLS_HPP

#include <span>
#include <vector>

#include "oparax/grid.hpp"
#include "oparax/params.hpp"
#include "oparax/types.hpp"

namespace oparax {

// Complex symbols of the tilted-frame operator. Everything below is built
// from the principal square root (branch with positive real part); with
// nu > 0 no argument ever lands on the cut.

// Branch with Re > 0, cut along the closed negative real axis.
// Throws branch_cut for z real <= 0.
cplx principal_sqrt(cplx z);

// Argument of the root shared by r_pm / entrance_multiplier / k_hat:
//   1 - 2 eps ky eta / kx^2 + 2 i nu eps ky^2 / kx^2.
cplx root_argument_eta(double eta, const PhysicalParams& p);

// Root S(eta) = principal_sqrt(root_argument_eta).
cplx entrance_root(double eta, const PhysicalParams& p);

// Roots in the x-frequency of the characteristic polynomial:
//   R_pm(i eta) = i (kx/ky) eta - i (kx/(eps ky^2)) (1 +- S(eta)).
// sign = +1 or -1; Re R_- < 0 < Re R_+ for every eta.
cplx r_pm(double eta, int sign, const PhysicalParams& p);

// Roots in the y-frequency:
//   A_pm(i xi) = i (ky/kx) xi - i (ky/(eps kx^2)) (1 +- S2(xi)),
//   S2(xi) = principal_sqrt(1 - 2 eps kx xi / ky^2 + 2 i eps nu kx^2 / ky^2).
cplx a_pm(double xi, int sign, const PhysicalParams& p);

// M(eta) = 2 / (1 + S(eta)): maps the boundary datum's spectrum to the x = 0
// trace spectrum. Satisfies |M|^4 (1 + eta^2) <= C^4 with
// C = stability_constant(p).
cplx entrance_multiplier(double eta, const PhysicalParams& p);

// Quadrant kernel K^(eta) = -(R_- - i (kx/ky) eta) / (R_+ - R_-).
// Algebraically (1 - 1/S)/2.
cplx k_hat(double eta, const PhysicalParams& p);

// Quadrant source G^(eta) = -(2 i kx/(eps ky^2)) gcoeff / (R_+ - R_-).
// Algebraically gcoeff / S.
cplx g_hat(cplx gcoeff, double eta, const PhysicalParams& p);

// P_nu(i xi, i eta) = i (kx i xi + ky i eta)
//                     + (eps/2) ((i xi)^2 ky^2 - 2 kx ky (i xi)(i eta)
//                                + kx^2 (i eta)^2) + i nu.
// Factorizations: (eps ky^2/2)(i xi - R_+)(i xi - R_-)
//             and (eps kx^2/2)(i eta - A_+)(i eta - A_-).
cplx characteristic_poly(double xi, double eta, const PhysicalParams& p);

// 2 * sqrt(1 + kx^2/(eps |ky|)) — the stability constant bounding the
// slice-norm ratio (see diagnostics::stability_ratio).
double stability_constant(const PhysicalParams& p);

// Per-grid precomputation of the symbols reused across x-slices.
// Construction checks the root-sign and kernel identities on every bin.
class SymbolTable {
 public:
  SymbolTable(const PhysicalParams& params, const SpectralGrid& grid);

  const PhysicalParams& params() const { return params_; }
  const SpectralGrid& grid() const { return grid_; }

  std::span<const cplx> root() const { return root_; }  // S(eta_j)
  std::span<const cplx> r_minus() const { return r_minus_; }
  std::span<const cplx> r_plus() const { return r_plus_; }
  std::span<const cplx> m_entrance() const { return m_entrance_; }
  std::span<const cplx> k_hat() const { return k_hat_; }

 private:
  PhysicalParams params_;
  SpectralGrid grid_;
  std::vector<cplx> root_;
  std::vector<cplx> r_minus_;
  std::vector<cplx> r_plus_;
  std::vector<cplx> m_entrance_;
  std::vector<cplx> k_hat_;
};

}  // namespace oparax

#endif
