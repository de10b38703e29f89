//============================================================================
// Test-only oracles, independent of the library under test.
//
// 256-bit complex arithmetic on top of MPFR, with a numerically stable
// principal square root, re-deriving every symbol from its printed
// definition rather than from the library's code paths. Everything rounds
// to double only at the very end.
//============================================================================
#ifndef OPARAX_TESTS_ORACLES_HPP
#define OPARAX_TESTS_ORACLES_HPP

#include <complex>

namespace oracles {

struct Params {
  double epsilon;
  double kx;
  double ky;
  double nu;
};

// sqrt(1 - 2 eps ky eta / kx^2 + 2 i nu eps ky^2 / kx^2), principal branch.
std::complex<double> s_root(double eta, const Params& p);

// R_{+/-}(i eta) = i (kx/ky) eta - i kx/(eps ky^2) (1 +/- S(eta)).
std::complex<double> r_pm(double eta, int sign, const Params& p);

// A_{+/-}(i xi) = i (ky/kx) xi - i ky/(eps kx^2) (1 +/- S2(xi)),
// S2 = sqrt(1 - 2 eps kx xi / ky^2 + 2 i eps nu kx^2 / ky^2).
std::complex<double> a_pm(double xi, int sign, const Params& p);

// M(eta) = 2 / (1 + S(eta)).
std::complex<double> m_entrance(double eta, const Params& p);

// K^(eta) = -(R_- - i (kx/ky) eta) / (R_+ - R_-); equals (1 - 1/S)/2.
// Computed both ways at 256 bits; aborts if they disagree beyond 1e-60.
std::complex<double> k_hat(double eta, const Params& p);

// P_nu(i xi, i eta) from its definition: i(kx xi + ky eta)
// + (eps/2)((i xi)^2 ky^2 - 2 kx ky (i xi)(i eta) + kx^2 (i eta)^2) + i nu.
std::complex<double> char_poly(double xi, double eta, const Params& p);

}  // namespace oracles

#endif
