#ifndef OPARAX_GRID_HPP
#define OPARAX_GRID_HPP

#include <cmath>
#include <cstddef>

#include "oparax/errors.hpp"
#include "oparax/types.hpp"

namespace oparax {

// Uniform sample line: points x0 + i*dx for i in [0, n). n is a power of two
// (>= 8) so the matching DFT frequency map is unambiguous.
class Grid1D {
 public:
  Grid1D(std::size_t n, double x0, double dx);

  std::size_t size() const { return n_; }
  double origin() const { return x0_; }
  double spacing() const { return dx_; }
  double length() const { return static_cast<double>(n_) * dx_; }
  double point(std::size_t i) const { return x0_ + static_cast<double>(i) * dx_; }

  // Inverse of point(); exact for on-grid values.
  std::size_t index_of(double x) const {
    return static_cast<std::size_t>(std::llround((x - x0_) / dx_));
  }

  bool operator==(const Grid1D& o) const {
    return n_ == o.n_ && x0_ == o.x0_ && dx_ == o.dx_;
  }
  bool operator!=(const Grid1D& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  double x0_;
  double dx_;
};

// DFT frequencies matched to a Grid1D: eta_j = deta*j for j in [-n/2, n/2),
// deta = 2*pi/(n*dx). Stored in transform bin order k in [0, n), where
// j = k for k < n/2 and j = k - n otherwise (Nyquist bin on the negative
// side). Keeps the sample line, so forward/inverse transforms can carry the
// origin phase.
class SpectralGrid {
 public:
  explicit SpectralGrid(const Grid1D& line);

  std::size_t size() const { return line_.size(); }
  double spacing() const { return deta_; }
  const Grid1D& line() const { return line_; }

  long jindex(std::size_t k) const {
    const long n = static_cast<long>(size());
    const long kl = static_cast<long>(k);
    return kl < n / 2 ? kl : kl - n;
  }
  double frequency(std::size_t k) const {
    return deta_ * static_cast<double>(jindex(k));
  }
  // Inverse of frequency(); exact for on-grid values.
  std::size_t bin_of(double eta) const {
    const long n = static_cast<long>(size());
    long j = std::lround(eta / deta_);
    return static_cast<std::size_t>(j >= 0 ? j : j + n);
  }

  bool operator==(const SpectralGrid& o) const { return line_ == o.line_; }
  bool operator!=(const SpectralGrid& o) const { return !(*this == o); }

 private:
  Grid1D line_;
  double deta_;
};

}  // namespace oparax

#endif
