#include "oparax/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "oparax/dft.hpp"
#include "oparax/errors.hpp"
#include "oparax/symbols.hpp"

namespace oparax {

HalfLineSignal::HalfLineSignal(const Grid1D& grid_, std::vector<cplx> samples_)
    : grid(grid_), samples(std::move(samples_)) {
  if (samples.size() != grid.size())
    fail(errc::grid_mismatch, "HalfLineSignal: sample count differs from grid");
  if (grid.origin() != 0.0)
    fail(errc::invalid_argument, "HalfLineSignal: grid must start at x = 0");
}

double y_a(double x, double a) {
  if (!std::isfinite(x) || !std::isfinite(a))
    fail(errc::invalid_argument, "y_a: non-finite argument");
  if (a <= -1.0)
    fail(errc::pointwise_undefined,
         "y_a: order <= -1 has no pointwise values");
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (a > 0.0) return 0.0;
    if (a == 0.0) return 1.0;
    fail(errc::pointwise_undefined, "y_a: negative order diverges at x = 0");
  }
  return std::pow(x, a) / std::tgamma(1.0 + a);
}

//----------------------------------------------------------------------------
// Product-integration half derivative: F(x) = (1/sqrt(pi)) int_0^x f(s)
// (x-s)^{-1/2} ds with f piecewise linear, then d/dx by second-order
// differences.  The kernel moments over a cell at distance [a,b] from the
// target are I0 = 2(sqrt(b)-sqrt(a)) and I1 = (2/3)(b^{3/2}-a^{3/2}).
//----------------------------------------------------------------------------
HalfLineSignal half_derivative_abel(const HalfLineSignal& f) {
  const std::size_t n = f.grid.size();
  const double dx = f.grid.spacing();

  std::vector<double> sq(n + 1);
  for (std::size_t r = 0; r <= n; ++r)
    sq[r] = std::sqrt(static_cast<double>(r) * dx);
  // i0[r] and j1[r] = b*I0 - I1 for the cell [(r-1)dx, r dx].
  std::vector<double> i0(n), j1(n);
  for (std::size_t r = 1; r < n; ++r) {
    const double a = static_cast<double>(r - 1) * dx;
    const double b = static_cast<double>(r) * dx;
    i0[r] = 2.0 * (sq[r] - sq[r - 1]);
    const double i1 = (2.0 / 3.0) * (b * sq[r] - a * sq[r - 1]);
    j1[r] = b * i0[r] - i1;
  }

  const double scale = 1.0 / std::sqrt(pi);
  std::vector<cplx> F(n, cplx{0.0, 0.0});
  for (std::size_t m = 1; m < n; ++m) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t r = m - j;
      const cplx slope = (f.samples[j + 1] - f.samples[j]) / dx;
      acc += f.samples[j] * i0[r] + slope * j1[r];
    }
    F[m] = scale * acc;
  }

  std::vector<cplx> out(n);
  out[0] = (-3.0 * F[0] + 4.0 * F[1] - F[2]) / (2.0 * dx);
  for (std::size_t m = 1; m + 1 < n; ++m)
    out[m] = (F[m + 1] - F[m - 1]) / (2.0 * dx);
  out[n - 1] = (3.0 * F[n - 1] - 4.0 * F[n - 2] + F[n - 3]) / (2.0 * dx);
  return HalfLineSignal(f.grid, std::move(out));
}

namespace {

void warn_edge(const HalfLineSignal& f, std::vector<std::string>* warnings) {
  if (!warnings) return;
  double peak = 0.0;
  for (const cplx& v : f.samples) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return;
  const double edge = std::abs(f.samples.back());
  if (edge > 1e-12 * peak) {
    std::ostringstream os;
    os << "EdgeLeak: signal magnitude " << edge
       << " at the end of the line exceeds 1e-12 of the peak " << peak
       << "; the padded transform wraps around";
    warnings->push_back(os.str());
  }
}

// Zero-pad to twice the length, apply a Fourier multiplier, keep the first
// half.  The padding pushes the periodic image far enough away for signals
// that decay before the end of the line.
std::vector<cplx> padded_multiplier(const HalfLineSignal& f,
                                    const std::function<cplx(double)>& mult) {
  const std::size_t n = f.grid.size();
  const Grid1D padded(2 * n, 0.0, f.grid.spacing());
  std::vector<cplx> ext(2 * n, cplx{0.0, 0.0});
  std::copy(f.samples.begin(), f.samples.end(), ext.begin());
  const Spectrum spec = forward_dft(ext, padded);
  const std::vector<cplx> full = inverse_dft(apply_multiplier(spec, mult));
  return std::vector<cplx>(full.begin(),
                           full.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

HalfLineSignal half_derivative_spectral(const HalfLineSignal& f,
                                        std::vector<std::string>* warnings) {
  warn_edge(f, warnings);
  auto mult = [](double xi) -> cplx {
    if (xi == 0.0) return cplx{0.0, 0.0};
    const double root = std::sqrt(std::abs(xi));
    const double c = root * std::numbers::sqrt2 / 2.0;
    return xi > 0.0 ? cplx{c, c} : cplx{c, -c};
  };
  return HalfLineSignal(f.grid, padded_multiplier(f, mult));
}

HalfLineSignal sqrt_operator(const HalfLineSignal& u, const PhysicalParams& p,
                             SqrtOpMode mode,
                             std::vector<std::string>* warnings) {
  validate_params(p);
  if (mode == SqrtOpMode::spectral) {
    warn_edge(u, warnings);
    const cplx phase = std::exp(cplx{0.0, -0.25 * pi});
    auto mult = [&p, phase](double xi) -> cplx {
      const cplx arg{2.0 * p.epsilon * p.nu * p.kx * p.kx,
                     2.0 * p.epsilon * p.kx * xi - p.ky * p.ky};
      return phase * principal_sqrt(arg);
    };
    return HalfLineSignal(u.grid, padded_multiplier(u, mult));
  }

  // Convolution route: conjugate the half derivative by exp(theta x).
  const cplx theta{p.nu * p.kx, -p.ky * p.ky / (2.0 * p.epsilon * p.kx)};
  const std::size_t n = u.grid.size();
  std::vector<cplx> damped(n);
  for (std::size_t m = 0; m < n; ++m)
    damped[m] = u.samples[m] * std::exp(theta * u.grid.point(m));
  const HalfLineSignal inner =
      half_derivative_abel(HalfLineSignal(u.grid, std::move(damped)));
  const cplx front = std::sqrt(2.0 * p.epsilon * p.kx) *
                     std::exp(cplx{0.0, -0.25 * pi});
  std::vector<cplx> out(n);
  for (std::size_t m = 0; m < n; ++m)
    out[m] = front * std::exp(-theta * u.grid.point(m)) * inner.samples[m];
  return HalfLineSignal(u.grid, std::move(out));
}

}  // namespace oparax
