#include "oparax/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "oparax/errors.hpp"

namespace oparax {

namespace {

// One FFTW plan per (size, direction), created once under a lock and executed
// via the new-array interface (planned with FFTW_UNALIGNED so any buffer
// qualifies). fftw_execute_dft is thread-safe; plan creation is not.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void run(std::size_t n, int sign, const cplx* in, cplx* out) {
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto key = std::make_pair(n, sign);
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        std::vector<cplx> a(n), b(n);
        plan = fftw_plan_dft_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(a.data()),
                                reinterpret_cast<fftw_complex*>(b.data()),
                                sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    // Out-of-place c2c transforms leave the input untouched.
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }
  std::mutex mu_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

}  // namespace

Spectrum::Spectrum(const SpectralGrid& g, std::vector<cplx> c)
    : grid(g), coeffs(std::move(c)) {
  if (coeffs.size() != grid.size())
    fail(errc::grid_mismatch, "spectrum length does not match its grid");
}

Spectrum forward_dft(std::span<const cplx> data, const Grid1D& grid) {
  const std::size_t n = grid.size();
  if (data.size() != n)
    fail(errc::grid_mismatch, "forward_dft: data length != grid size");
  for (const cplx& v : data) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(errc::invalid_argument, "forward_dft: non-finite sample");
  }

  SpectralGrid sg(grid);
  std::vector<cplx> c(n);
  PlanCache::instance().run(n, FFTW_FORWARD, data.data(), c.data());

  // c_k = dy * exp(-i eta_k y0) * DFT_k(f)
  const double dy = grid.spacing();
  const double y0 = grid.origin();
  for (std::size_t k = 0; k < n; ++k) {
    const double eta = sg.frequency(k);
    c[k] *= dy * std::exp(cplx(0.0, -eta * y0));
  }
  return Spectrum(sg, std::move(c));
}

std::vector<cplx> inverse_dft(const Spectrum& s) {
  const std::size_t n = s.grid.size();
  const Grid1D& line = s.grid.line();
  const double dy = line.spacing();
  const double y0 = line.origin();

  // f_m = (1/(n dy)) sum_k c_k exp(+i eta_k y0) exp(+2pi i k m / n)
  std::vector<cplx> pre(n);
  const double scale = 1.0 / (static_cast<double>(n) * dy);
  for (std::size_t k = 0; k < n; ++k) {
    const double eta = s.grid.frequency(k);
    pre[k] = s.coeffs[k] * std::exp(cplx(0.0, eta * y0)) * scale;
  }
  std::vector<cplx> f(n);
  PlanCache::instance().run(n, FFTW_BACKWARD, pre.data(), f.data());
  return f;
}

Spectrum apply_multiplier(const Spectrum& s,
                          const std::function<cplx(double)>& m) {
  std::vector<cplx> c(s.coeffs.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double eta = s.grid.frequency(k);
    const cplx mk = m(eta);
    if (!std::isfinite(mk.real()) || !std::isfinite(mk.imag())) {
      std::ostringstream os;
      os << "multiplier is not finite at eta = " << eta;
      fail(errc::non_finite_multiplier, os.str());
    }
    c[k] = mk * s.coeffs[k];
  }
  return Spectrum(s.grid, std::move(c));
}

double sobolev_norm_sq(const Spectrum& s, double order) {
  double acc = 0.0;
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    const double eta = s.grid.frequency(k);
    acc += std::norm(s.coeffs[k]) * std::pow(1.0 + eta * eta, order);
  }
  return acc * s.grid.spacing() / (2.0 * pi);
}

cplx oracle_inverse_fourier(const std::function<cplx(double)>& spec_fn,
                            double y, double window, std::size_t steps) {
  if (steps < 1024)
    fail(errc::invalid_argument, "oracle_inverse_fourier: steps < 1024");
  if (!(window > 0.0))
    fail(errc::invalid_argument, "oracle_inverse_fourier: window <= 0");
  const double h = 2.0 * window / static_cast<double>(steps);
  auto integrand = [&](double eta) {
    return spec_fn(eta) * std::exp(cplx(0.0, eta * y));
  };
  cplx acc = 0.5 * (integrand(-window) + integrand(window));
  for (std::size_t i = 1; i < steps; ++i) {
    acc += integrand(-window + h * static_cast<double>(i));
  }
  return acc * h / (2.0 * pi);
}

double l2_norm_sq(std::span<const cplx> data, double dy) {
  double acc = 0.0;
  for (const cplx& v : data) acc += std::norm(v);
  return acc * dy;
}

}  // namespace oparax
