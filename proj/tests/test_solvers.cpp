//============================================================================
// Half-space and quadrant solvers.
//
// The half-space solution is pinned three independent ways:
//   * per-bin algebra: slice spectra, entrance condition, dispersion zero;
//   * pointwise values against a brute-force Fourier quadrature that shares
//     no code with the FFT pipeline;
//   * structural checks (trace row, determinism across thread counts).
//============================================================================
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "oparax/oparax.hpp"

using namespace oparax;

namespace {

const PhysicalParams kUp{0.1, 0.70710678118654752, 0.70710678118654752, 0.5};
const PhysicalParams kDown{0.1, 0.70710678118654752, -0.70710678118654752,
                           0.5};

double peak_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

//----------------------------------------------------------------------------
// Datum map
//----------------------------------------------------------------------------

TEST_CASE("g_from_uin applies 1 - eps ky eta / 2 bin by bin") {
  Grid1D yg(512, -32.0, 0.125);
  BoundaryData uin = BoundaryData::gaussian(yg, BoundaryKind::u_in, 0.0, 1.0,
                                            1.0);
  BoundaryData g = g_from_uin(uin, kUp);
  CHECK(g.kind == BoundaryKind::g);
  CHECK(g.grid == yg);
  Spectrum su = forward_dft(uin.samples, yg);
  Spectrum sg = forward_dft(g.samples, yg);
  const double scale = peak_abs(su.coeffs);
  for (std::size_t k = 0; k < sg.coeffs.size(); ++k) {
    const double eta = su.grid.frequency(k);
    const cplx want = (1.0 - 0.5 * kUp.epsilon * kUp.ky * eta) * su.coeffs[k];
    CHECK(std::abs(sg.coeffs[k] - want) <= 1e-12 * scale);
  }
}

//----------------------------------------------------------------------------
// Half-space solver: per-bin algebra
//----------------------------------------------------------------------------

TEST_CASE("half-space slice spectra follow M g^ exp(R_- x)") {
  Grid1D yg(512, -32.0, 0.125);
  Grid1D xg(16, 0.0, 0.25);
  BoundaryData g = BoundaryData::gaussian(yg, BoundaryKind::g, 0.0, 1.0, 1.0);
  HalfSpaceSolution sol = solve_halfspace(g, xg, kUp);
  CHECK(sol.warnings.empty());

  // trace_hat is M g^ bin by bin.
  const double scale = peak_abs(sol.g_hat.coeffs);
  for (std::size_t k = 0; k < sol.g_hat.coeffs.size(); ++k) {
    const cplx want = sol.symbols.m_entrance()[k] * sol.g_hat.coeffs[k];
    CHECK(std::abs(sol.trace_hat.coeffs[k] - want) <= 1e-14 * scale);
  }

  // Every slice transforms back onto trace_hat exp(R_- x).
  for (std::size_t ix : {std::size_t{0}, std::size_t{5}, std::size_t{15}}) {
    const double x = xg.point(ix);
    Spectrum s = forward_dft(sol.field.row(ix), yg);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
      const cplx want =
          sol.trace_hat.coeffs[k] * std::exp(sol.symbols.r_minus()[k] * x);
      CHECK(std::abs(s.coeffs[k] - want) <= 1e-12 * scale);
    }
  }

  // Row 0 is the trace.
  for (std::size_t j = 0; j < yg.size(); ++j) {
    CHECK(std::abs(sol.field.at(0, j) - sol.trace0.samples[j]) <=
          1e-14 * sol.trace0.max_abs());
  }
}

TEST_CASE("entrance condition holds bin by bin at x = 0") {
  Grid1D yg(512, -32.0, 0.125);
  Grid1D xg(8, 0.0, 0.25);
  for (const PhysicalParams& p : {kUp, kDown}) {
    BoundaryData g =
        BoundaryData::gaussian(yg, BoundaryKind::g, 1.0, 0.75, 1.0);
    HalfSpaceSolution sol = solve_halfspace(g, xg, p);
    double scale = 0.0;
    for (const cplx& c : sol.g_hat.coeffs)
      scale = std::max(scale, std::abs(2.0 * p.kx * c));
    for (std::size_t k = 0; k < sol.g_hat.coeffs.size(); ++k) {
      const double eta = sol.g_hat.grid.frequency(k);
      const cplx u0 = sol.trace_hat.coeffs[k];
      // i eps ky (kx d_y - ky d_x) u + 2 kx u at x = 0, d_y -> i eta,
      // d_x -> R_-.
      const cplx lhs = iu * p.epsilon * p.ky *
                           (p.kx * cplx(0.0, eta) -
                            p.ky * sol.symbols.r_minus()[k]) *
                           u0 +
                       2.0 * p.kx * u0;
      const cplx rhs = 2.0 * p.kx * sol.g_hat.coeffs[k];
      CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
      if (std::abs(rhs) >= 1e-6 * scale) {
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      }
    }
  }
}

TEST_CASE("R_- zeroes the dispersion relation of the advected envelope") {
  const PhysicalParams sets[] = {kUp, kDown,
                                 PhysicalParams{0.8, 0.28, -0.96, 5.0}};
  std::mt19937 gen(777);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  for (const PhysicalParams& p : sets) {
    for (int i = 0; i < 300; ++i) {
      const double eta = u(gen);
      for (int sign : {-1, +1}) {
        const cplx X = r_pm(eta, sign, p);
        const cplx Y(0.0, eta);
        const cplx pv = iu * (p.kx * X + p.ky * Y) +
                        0.5 * p.epsilon *
                            (X * X * p.ky * p.ky - 2.0 * p.kx * p.ky * X * Y +
                             p.kx * p.kx * Y * Y) +
                        iu * p.nu;
        CHECK(std::abs(pv) <= 1e-12 * (1.0 + std::norm(X)));
      }
    }
  }
}

//----------------------------------------------------------------------------
// Half-space solver: independent quadrature probes
//----------------------------------------------------------------------------

TEST_CASE("field values match the brute-force inversion of M g^ exp(R_- x)") {
  Grid1D yg(512, -32.0, 0.125);
  Grid1D xg(16, 0.0, 0.25);
  BoundaryData g = BoundaryData::gaussian(yg, BoundaryKind::g, 0.0, 1.0, 1.0);
  HalfSpaceSolution sol = solve_halfspace(g, xg, kUp);

  // Continuous transform of the datum: sqrt(2 pi) exp(-eta^2 / 2).
  auto ghat = [](double eta) {
    return std::sqrt(2.0 * pi) * std::exp(-0.5 * eta * eta);
  };
  struct Probe {
    std::size_t ix;
    double y;
  };
  for (const Probe& pr : {Probe{4, 2.0}, Probe{8, 0.5}, Probe{15, -1.5}}) {
    const double x = xg.point(pr.ix);
    auto spec = [&](double eta) {
      return entrance_multiplier(eta, kUp) * ghat(eta) *
             std::exp(r_pm(eta, -1, kUp) * x);
    };
    const cplx want = oracle_inverse_fourier(spec, pr.y, 24.0, 1u << 15);
    const cplx got = sol.field.at(pr.ix, yg.index_of(pr.y));
    CHECK(std::abs(got - want) <= 1e-8);
  }
}

//----------------------------------------------------------------------------
// Half-space solver: structure and validation
//----------------------------------------------------------------------------

TEST_CASE("solver output is bit-identical across thread counts") {
  Grid1D yg(256, -16.0, 0.125);
  Grid1D xg(32, 0.0, 0.125);
  BoundaryData g = BoundaryData::gaussian(yg, BoundaryKind::g, 0.0, 1.0, 1.0);
  HalfSpaceSolution one = solve_halfspace(g, xg, kUp, 1);
  HalfSpaceSolution many = solve_halfspace(g, xg, kUp, 7);
  REQUIRE(one.field.values().size() == many.field.values().size());
  CHECK(std::memcmp(one.field.values().data(), many.field.values().data(),
                    one.field.values().size() * sizeof(cplx)) == 0);
}

TEST_CASE("solve_halfspace validates the x-grid and flags edge leakage") {
  Grid1D yg(256, -16.0, 0.125);
  BoundaryData g = BoundaryData::gaussian(yg, BoundaryKind::g, 0.0, 1.0, 1.0);
  try {
    solve_halfspace(g, Grid1D(8, 1.0, 0.25), kUp);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
  // Datum parked against the right edge must warn.
  BoundaryData leaky =
      BoundaryData::gaussian(yg, BoundaryKind::g, 15.0, 2.0, 1.0);
  HalfSpaceSolution sol = solve_halfspace(leaky, Grid1D(8, 0.0, 0.25), kUp);
  REQUIRE(sol.warnings.size() == 1);
  CHECK(sol.warnings[0].find("EdgeLeak") != std::string::npos);
}

//----------------------------------------------------------------------------
// Quadrant solver
//----------------------------------------------------------------------------

TEST_CASE("transparent orientation reproduces the restricted half-space") {
  // The cutoff step sees the periodized entrance kernel's e^{-nu ky y} tail
  // below y = 0, so the window sets the agreement floor; ly = 128 puts it
  // at roundoff (ly = 32 would sit near 1e-6).
  Grid1D yg(1024, -64.0, 0.125);
  Grid1D xg(8, 0.0, 0.25);
  BoundaryData gp =
      BoundaryData::gaussian(yg, BoundaryKind::g_plus, 4.0, 0.5, 1.0);
  QuadrantSolution U = solve_quadrant(gp, xg, kUp);
  BoundaryData g(yg, gp.samples, BoundaryKind::g, 0.0);
  HalfSpaceSolution u = solve_halfspace(g, xg, kUp);

  const std::size_t half = yg.size() / 2;
  CHECK(U.field.ny() == half);
  CHECK(U.field.ygrid().origin() == 0.0);
  double worst = 0.0, scale = 0.0;
  for (std::size_t ix = 0; ix < xg.size(); ++ix) {
    for (std::size_t j = 0; j < half; ++j) {
      worst = std::max(worst,
                       std::abs(U.field.at(ix, j) - u.field.at(ix, half + j)));
      scale = std::max(scale, std::abs(u.field.at(ix, half + j)));
    }
  }
  CHECK(worst <= 1e-10 * scale);
  CHECK(trace_equation_residual(U, gp, kUp) <= 1e-10);
}

TEST_CASE("quadrant trace is the first field row") {
  Grid1D yg(256, -16.0, 0.125);
  Grid1D xg(8, 0.0, 0.25);
  BoundaryData gp =
      BoundaryData::gaussian(yg, BoundaryKind::g_plus, 4.0, 0.5, 1.0);
  for (const PhysicalParams& p : {kUp, kDown}) {
    QuadrantSolution U = solve_quadrant(gp, xg, p);
    REQUIRE(U.trace0.size() == U.field.ny());
    const double scale = peak_abs(U.trace0);
    for (std::size_t j = 0; j < U.trace0.size(); ++j) {
      CHECK(std::abs(U.field.at(0, j) - U.trace0[j]) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("absorbing orientation still satisfies the construction") {
  Grid1D yg(256, -16.0, 0.125);
  Grid1D xg(8, 0.0, 0.25);
  BoundaryData gp =
      BoundaryData::gaussian(yg, BoundaryKind::g_plus, 4.0, 0.5, 1.0);
  QuadrantSolution U = solve_quadrant(gp, xg, kDown);
  CHECK(U.warnings.empty());
  U.field.check_finite("test");
  // The one-pass construction is a fixed point only for the transparent
  // orientation; here the defect is merely finite and modest.
  const double r = trace_equation_residual(U, gp, kDown);
  CHECK(std::isfinite(r));
  CHECK(r <= 1.0);
}

TEST_CASE("quadrant determinism across thread counts") {
  Grid1D yg(256, -16.0, 0.125);
  Grid1D xg(16, 0.0, 0.25);
  BoundaryData gp =
      BoundaryData::gaussian(yg, BoundaryKind::g_plus, 4.0, 0.5, 1.0);
  QuadrantSolution one = solve_quadrant(gp, xg, kUp, 1);
  QuadrantSolution many = solve_quadrant(gp, xg, kUp, 5);
  CHECK(std::memcmp(one.field.values().data(), many.field.values().data(),
                    one.field.values().size() * sizeof(cplx)) == 0);
}

TEST_CASE("quadrant input validation") {
  Grid1D yg(256, -16.0, 0.125);
  Grid1D xg(8, 0.0, 0.25);
  auto code_of = [&](const BoundaryData& b, const Grid1D& xgrid,
                     const PhysicalParams& p) {
    try {
      solve_quadrant(b, xgrid, p);
    } catch (const Error& e) {
      return e.code();
    }
    return errc::io_error;
  };
  // Wrong kind.
  BoundaryData g = BoundaryData::gaussian(yg, BoundaryKind::g, 4.0, 0.5, 1.0);
  CHECK(code_of(g, xg, kUp) == errc::invalid_argument);
  // Asymmetric y-line.
  Grid1D skew(256, -8.0, 0.125);
  BoundaryData gs =
      BoundaryData::gaussian(skew, BoundaryKind::g_plus, 4.0, 0.5, 1.0);
  CHECK(code_of(gs, xg, kUp) == errc::invalid_argument);
  // x-line not anchored at 0.
  BoundaryData gp =
      BoundaryData::gaussian(yg, BoundaryKind::g_plus, 4.0, 0.5, 1.0);
  CHECK(code_of(gp, Grid1D(8, -1.0, 0.25), kUp) == errc::invalid_argument);

  // Residual guards its grids.
  QuadrantSolution U = solve_quadrant(gp, xg, kUp);
  BoundaryData other =
      BoundaryData::gaussian(Grid1D(128, -8.0, 0.125), BoundaryKind::g_plus,
                             4.0, 0.5, 1.0);
  try {
    trace_equation_residual(U, other, kUp);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::grid_mismatch);
  }
}
