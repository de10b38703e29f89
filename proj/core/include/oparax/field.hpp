#ifndef OPARAX_FIELD_HPP
#define OPARAX_FIELD_HPP

#include <span>
#include <vector>

#include "oparax/grid.hpp"
#include "oparax/types.hpp"

namespace oparax {

// Complex amplitude u(x, y) sampled on xgrid x ygrid, x-major storage
// (row ix is the slice at x = xgrid.point(ix)).
class ComplexField2D {
 public:
  ComplexField2D(const Grid1D& xgrid, const Grid1D& ygrid);

  std::size_t nx() const { return xgrid_.size(); }
  std::size_t ny() const { return ygrid_.size(); }
  const Grid1D& xgrid() const { return xgrid_; }
  const Grid1D& ygrid() const { return ygrid_; }

  cplx& at(std::size_t ix, std::size_t iy) { return values_[ix * ny() + iy]; }
  const cplx& at(std::size_t ix, std::size_t iy) const {
    return values_[ix * ny() + iy];
  }
  std::span<cplx> row(std::size_t ix) { return {&values_[ix * ny()], ny()}; }
  std::span<const cplx> row(std::size_t ix) const {
    return {&values_[ix * ny()], ny()};
  }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }

  // Throws invalid_argument if any entry is NaN or infinite.
  void check_finite(const char* what) const;

 private:
  Grid1D xgrid_;
  Grid1D ygrid_;
  std::vector<cplx> values_;
};

enum class BoundaryKind { g, u_in, g_plus };

const char* boundary_kind_name(BoundaryKind k);

// Samples of a boundary datum on a y-line. kind g_plus promises support in
// y > 0: samples at grid points y <= 0 must vanish (up to 1e-12 of the peak,
// leaving room for spectral ringing in derived data).
struct BoundaryData {
  Grid1D grid;
  std::vector<cplx> samples;
  BoundaryKind kind;
  double support_lo;  // infimum of the declared support

  BoundaryData(const Grid1D& grid, std::vector<cplx> samples, BoundaryKind kind,
               double support_lo);

  // amplitude * exp(-(y-center)^2 / (2*width^2)) sampled on grid.
  static BoundaryData gaussian(const Grid1D& grid, BoundaryKind kind,
                               double center, double width, double amplitude);

  double max_abs() const;
};

}  // namespace oparax

#endif
