#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "oparax/errors.hpp"
#include "oparax/types.hpp"
#include "oparax/field.hpp"
#include "oparax/grid.hpp"
#include "oparax/parallel.hpp"
#include "oparax/params.hpp"

namespace oparax {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_unit_direction:   return "NonUnitDirection";
    case errc::non_positive_epsilon: return "NonPositiveEpsilon";
    case errc::non_positive_nu:      return "NonPositiveNu";
    case errc::zero_ky:              return "ZeroKy";
    case errc::non_finite_multiplier:return "NonFiniteMultiplier";
    case errc::branch_cut:           return "BranchCut";
    case errc::support_violation:    return "SupportViolation";
    case errc::grid_mismatch:        return "GridMismatch";
    case errc::wrong_sign_ky:        return "WrongSignKy";
    case errc::truncation_too_short: return "TruncationTooShort";
    case errc::pointwise_undefined:  return "PointwiseUndefined";
    case errc::io_error:             return "IoError";
    case errc::bad_magic:            return "BadMagic";
    case errc::length_mismatch:      return "LengthMismatch";
    case errc::unknown_key:          return "UnknownKey";
    case errc::missing_key:          return "MissingKey";
    case errc::type_error:           return "TypeError";
    case errc::invalid_argument:     return "InvalidArgument";
  }
  return "UnknownError";
}

//----------------------------------------------------------------------------
// PhysicalParams

PhysicalParams validate_params(const PhysicalParams& p) {
  if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon))
    fail(errc::non_positive_epsilon, "epsilon must be > 0");
  if (!(p.nu > 0.0) || !std::isfinite(p.nu))
    fail(errc::non_positive_nu, "nu must be > 0");
  if (!std::isfinite(p.kx) || !std::isfinite(p.ky))
    fail(errc::non_unit_direction, "direction must be finite");
  if (!(p.kx > 0.0))
    fail(errc::non_unit_direction, "kx must be > 0 (propagation into x > 0)");
  const double norm2 = p.kx * p.kx + p.ky * p.ky;
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "(kx, ky) must be a unit vector; kx^2 + ky^2 = " << norm2;
    fail(errc::non_unit_direction, os.str());
  }
  return p;
}

PhysicalParams PhysicalParams::from_direction(double epsilon, double kx,
                                              double ky, double nu) {
  return validate_params(PhysicalParams{epsilon, kx, ky, nu});
}

PhysicalParams PhysicalParams::from_angle(double epsilon, double theta,
                                          double nu) {
  if (!std::isfinite(theta) || std::abs(theta) >= 0.5 * pi)
    fail(errc::non_unit_direction, "theta must lie in (-pi/2, pi/2)");
  return validate_params(
      PhysicalParams{epsilon, std::cos(theta), std::sin(theta), nu});
}

void PhysicalParams::require_nonzero_ky(const char* what) const {
  if (zero_ky())
    fail(errc::zero_ky, std::string(what) + " requires ky != 0");
}

//----------------------------------------------------------------------------
// Grids

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid1D::Grid1D(std::size_t n, double x0, double dx) : n_(n), x0_(x0), dx_(dx) {
  if (n < 8 || !is_pow2(n)) {
    std::ostringstream os;
    os << "grid size must be a power of two >= 8, got " << n;
    fail(errc::invalid_argument, os.str());
  }
  if (!(dx > 0.0) || !std::isfinite(dx))
    fail(errc::invalid_argument, "grid spacing must be positive and finite");
  if (!std::isfinite(x0))
    fail(errc::invalid_argument, "grid origin must be finite");
}

SpectralGrid::SpectralGrid(const Grid1D& line)
    : line_(line),
      deta_(2.0 * pi / (static_cast<double>(line.size()) * line.spacing())) {}

//----------------------------------------------------------------------------
// Fields

ComplexField2D::ComplexField2D(const Grid1D& xgrid, const Grid1D& ygrid)
    : xgrid_(xgrid), ygrid_(ygrid), values_(xgrid.size() * ygrid.size()) {}

void ComplexField2D::check_finite(const char* what) const {
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(errc::invalid_argument,
           std::string(what) + ": field contains a non-finite entry");
  }
}

const char* boundary_kind_name(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::g:      return "g";
    case BoundaryKind::u_in:   return "u_in";
    case BoundaryKind::g_plus: return "g_plus";
  }
  return "?";
}

BoundaryData::BoundaryData(const Grid1D& grid_, std::vector<cplx> samples_,
                           BoundaryKind kind_, double support_lo_)
    : grid(grid_), samples(std::move(samples_)), kind(kind_),
      support_lo(support_lo_) {
  if (samples.size() != grid.size())
    fail(errc::grid_mismatch, "boundary samples do not match the grid size");
  if (kind == BoundaryKind::g_plus) {
    const double peak = max_abs();
    const double tol = 1e-12 * peak;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid.point(i) <= 0.0 && std::abs(samples[i]) > tol) {
        std::ostringstream os;
        os << "g_plus sample at y = " << grid.point(i) << " has magnitude "
           << std::abs(samples[i]) << " (allowed " << tol << ")";
        fail(errc::support_violation, os.str());
      }
    }
  }
}

BoundaryData BoundaryData::gaussian(const Grid1D& grid, BoundaryKind kind,
                                    double center, double width,
                                    double amplitude) {
  if (!(width > 0.0))
    fail(errc::invalid_argument, "gaussian width must be > 0");
  std::vector<cplx> s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = (grid.point(i) - center) / width;
    s[i] = amplitude * std::exp(-0.5 * t * t);
  }
  const double lo = kind == BoundaryKind::g_plus
                        ? 0.0
                        : -std::numeric_limits<double>::infinity();
  return BoundaryData(grid, std::move(s), kind, lo);
}

double BoundaryData::max_abs() const {
  double m = 0.0;
  for (const cplx& v : samples) m = std::max(m, std::abs(v));
  return m;
}

//----------------------------------------------------------------------------
// Parallel map

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  if (threads <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t nw = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  // Static block partition: worker w owns [w*chunk, min((w+1)*chunk, count)).
  const std::size_t chunk = (count + nw - 1) / nw;
  for (std::size_t w = 0; w < nw; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace oparax
