#ifndef OPARAX_FRACTIONAL_HPP
#define OPARAX_FRACTIONAL_HPP

#include <string>
#include <vector>

#include "oparax/grid.hpp"
#include "oparax/params.hpp"
#include "oparax/types.hpp"

namespace oparax {

// Signal supported on the half line: samples on a grid with x0 = 0, implied
// value 0 for x < 0. The first sample may be nonzero (jump at the origin).
struct HalfLineSignal {
  Grid1D grid;
  std::vector<cplx> samples;

  HalfLineSignal(const Grid1D& grid, std::vector<cplx> samples);
};

// Y_a(x) = x_+^a / Gamma(1+a), pointwise. Only defined for a > -1; below
// that the family exists solely as convolution-kernel semantics, so
// evaluation throws pointwise_undefined.
double y_a(double x, double a);

// Half-order derivative via the singular convolution:
//   h(x) = (1/sqrt(pi)) int_0^x f(s)/sqrt(x-s) ds,  result = dh/dx.
// The 1/sqrt weight is integrated exactly against piecewise-linear f
// (product integration); dh/dx uses centered differences (one-sided,
// second order, at the ends). Causal by construction: output vanishes
// identically before the support of f. O(n^2).
HalfLineSignal half_derivative_abel(const HalfLineSignal& f);

// Half-order derivative via the Fourier multiplier sqrt(i xi) =
// exp(i sign(xi) pi/4) sqrt|xi| (0 at the xi = 0 bin, its principal-value
// limit) on a zero-padded double-length line that suppresses circular
// aliasing of the slowly decaying kernel. Emits EdgeLeak when f has not
// decayed at the far grid edge.
HalfLineSignal half_derivative_spectral(const HalfLineSignal& f,
                                        std::vector<std::string>* warnings
                                        = nullptr);

enum class SqrtOpMode { spectral, convolution };

// Square root of the first-order operator -ky^2 - 2 i eps kx d/dx
// - 2 i eps nu kx^2, acting on half-line signals.
//
// spectral:    multiplier exp(-i pi/4) sqrt(2 eps nu kx^2
//              + i (2 eps kx xi - ky^2)) on the zero-padded line; the
//              argument has positive real part for nu > 0, so the principal
//              branch never meets its cut.
// convolution: sqrt(2 eps kx) exp(-i pi/4) e^{-theta x} *
//              d/dx[(1/sqrt(pi)) int_0^x u(s) e^{theta s}/sqrt(x-s) ds]
//              with theta = -i ky^2/(2 eps kx) + nu kx, reusing the Abel
//              quadrature on the modulated signal.
HalfLineSignal sqrt_operator(const HalfLineSignal& u, const PhysicalParams& p,
                             SqrtOpMode mode,
                             std::vector<std::string>* warnings = nullptr);

}  // namespace oparax

#endif
