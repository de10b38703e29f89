#ifndef OPARAX_DFT_HPP
#define OPARAX_DFT_HPP

#include <functional>
#include <span>
#include <vector>

#include "oparax/grid.hpp"
#include "oparax/types.hpp"

namespace oparax {

// Line spectrum under the convention
//
//   F(f)(eta) = integral f(y) exp(-i eta y) dy,
//   f(y)      = (1/2pi) integral F(eta) exp(+i eta y) deta.
//
// coeffs are stored in transform bin order (see SpectralGrid); bin k holds
//
//   c_k = dy * exp(-i eta_k y0) * sum_m f_m exp(-2pi i k m / n),
//
// which is the trapezoid approximation of the integral above. Parseval holds
// exactly for the discrete sums: sum |f|^2 dy = (1/2pi) sum |c|^2 deta.
struct Spectrum {
  SpectralGrid grid;
  std::vector<cplx> coeffs;

  Spectrum(const SpectralGrid& g, std::vector<cplx> c);
};

Spectrum forward_dft(std::span<const cplx> data, const Grid1D& grid);
std::vector<cplx> inverse_dft(const Spectrum& s);

// coeffs_k <- m(eta_k) * coeffs_k. Throws non_finite_multiplier naming the
// offending frequency.
Spectrum apply_multiplier(const Spectrum& s,
                          const std::function<cplx(double)>& m);

// (1/2pi) * sum_j |c_j|^2 (1 + eta_j^2)^order * deta  — the squared discrete
// Sobolev norm of the underlying line.
double sobolev_norm_sq(const Spectrum& s, double order);

// Independent brute-force oracle: composite trapezoid of
// (1/2pi) integral_{-window}^{window} spec_fn(eta) exp(i eta y) deta.
// Deliberately shares no code with the DFT path. steps >= 1024.
cplx oracle_inverse_fourier(const std::function<cplx(double)>& spec_fn,
                            double y, double window, std::size_t steps);

// sum |f|^2 dy over the samples (discrete L^2 norm squared).
double l2_norm_sq(std::span<const cplx> data, double dy);

}  // namespace oparax

#endif
