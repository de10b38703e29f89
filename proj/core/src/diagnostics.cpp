#include "oparax/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "oparax/dft.hpp"
#include "oparax/symbols.hpp"

namespace oparax {

namespace {

double guard(double x) { return x > 1e-300 ? x : 1e-300; }

}  // namespace

EnergyReport energy_balance(const HalfSpaceSolution& sol,
                            const BoundaryData& uin, const PhysicalParams& p,
                            double xmax) {
  validate_params(p);
  if (uin.grid != sol.trace0.grid)
    fail(errc::grid_mismatch, "energy_balance: envelope grid differs from "
                              "the solution's transverse grid");
  if (uin.kind != BoundaryKind::u_in)
    fail(errc::invalid_argument,
         "energy_balance expects the incoming envelope (kind u_in)");
  if (!(xmax > 0.0))
    fail(errc::invalid_argument, "energy_balance: xmax must be positive");

  const Grid1D& xg = sol.field.xgrid();
  std::size_t last = 0;
  for (std::size_t ix = 0; ix < xg.size(); ++ix)
    if (xg.point(ix) <= xmax * (1.0 + 1e-12)) last = ix;
  if (last == 0)
    fail(errc::invalid_argument,
         "energy_balance: xmax shorter than the first propagation step");

  const double dy = uin.grid.spacing();
  const double dx = xg.spacing();

  // 2 nu int_0^xmax int |u|^2, trapezoid in x, exact in y.
  double absorbed = 0.0;
  for (std::size_t ix = 0; ix <= last; ++ix) {
    double s = 0.0;
    for (const cplx& v : sol.field.row(ix)) s += std::norm(v);
    const double w = (ix == 0 || ix == last) ? 0.5 : 1.0;
    absorbed += w * s;
  }
  absorbed *= 2.0 * p.nu * dy * dx;

  // Boundary terms, spectral. W = deta / 2 pi is the Parseval weight.
  const SpectralGrid& sg = sol.trace_hat.grid;
  const double W = sg.spacing() / (2.0 * pi);
  const Spectrum uin_hat = forward_dft(uin.samples, uin.grid);

  double outgoing = 0.0, trace_sq = 0.0, g_sq = 0.0, rhs2_sum = 0.0;
  double tail = 0.0, total = 0.0;
  const double x_last = xg.point(last);
  for (std::size_t k = 0; k < sol.trace_hat.coeffs.size(); ++k) {
    const double eta = sg.frequency(k);
    const cplx c = sol.trace_hat.coeffs[k];
    const double c2 = std::norm(c);
    const cplx s_root = entrance_root(eta, p);
    outgoing += std::norm(p.kx * (s_root - 3.0)) * c2;
    trace_sq += c2;
    g_sq += std::norm(sol.g_hat.coeffs[k]);
    // (eps D - 2 i kx) u_in at the entrance, with d_x u_in = 0:
    //   per mode (i eps kx ky eta - 2 i kx) u_in^.
    const cplx flux =
        cplx{0.0, p.epsilon * p.kx * p.ky * eta - 2.0 * p.kx} *
        uin_hat.coeffs[k];
    rhs2_sum += (std::conj(c) * flux).imag();

    const double rr = std::abs(r_pm(eta, -1, p).real());
    const double mode_total = 2.0 * p.nu * c2 / (2.0 * rr);
    total += mode_total;
    tail += mode_total * std::exp(-2.0 * rr * x_last);
  }
  outgoing *= W / (8.0 * p.kx);
  trace_sq *= W;
  g_sq *= W;

  EnergyReport rep;
  rep.absorbed = absorbed;
  rep.outgoing = outgoing;
  rep.incoming = p.kx * trace_sq + 0.5 * p.kx * g_sq;
  rep.lhs1 = absorbed + outgoing;
  rep.rhs1 = rep.incoming;
  rep.relative_residual1 =
      std::abs(rep.lhs1 - rep.rhs1) / guard(std::max(rep.lhs1, rep.rhs1));
  rep.lhs2 = absorbed + p.kx * trace_sq;
  rep.rhs2 = -W * rhs2_sum;
  rep.relative_residual2 =
      std::abs(rep.lhs2 - rep.rhs2) / guard(std::max(rep.lhs2, rep.rhs2));
  rep.xmax = x_last;
  rep.tail_fraction = total > 0.0 ? tail / total : 0.0;
  if (rep.tail_fraction > 1e-4) {
    std::ostringstream os;
    os << "energy_balance: estimated " << rep.tail_fraction
       << " of the absorbed energy lies beyond x = " << x_last;
    fail(errc::truncation_too_short, os.str());
  }
  return rep;
}

StabilityResult stability_ratio(const HalfSpaceSolution& sol,
                                const BoundaryData& g,
                                const PhysicalParams& p) {
  validate_params(p);
  p.require_nonzero_ky("stability_ratio");
  if (g.grid != sol.trace0.grid)
    fail(errc::grid_mismatch,
         "stability_ratio: datum grid differs from the solution grid");

  const Spectrum ghat = forward_dft(g.samples, g.grid);
  const double den_sq = sobolev_norm_sq(ghat, -0.5);

  StabilityResult res;
  res.bound = stability_constant(p);
  if (den_sq == 0.0) {
    res.margin = res.bound;
    return res;
  }
  const double W = ghat.grid.spacing() / (2.0 * pi);
  double sup_sq = 0.0;
  for (std::size_t ix = 0; ix < sol.field.xgrid().size(); ++ix) {
    const Spectrum row = forward_dft(sol.field.row(ix), g.grid);
    double s = 0.0;
    for (const cplx& v : row.coeffs) s += std::norm(v);
    sup_sq = std::max(sup_sq, s * W);
  }
  res.ratio = std::sqrt(sup_sq / den_sq);
  res.margin = res.bound - res.ratio;
  return res;
}

double transparency_error(const QuadrantSolution& U,
                          const HalfSpaceSolution& u) {
  if (U.field.xgrid() != u.field.xgrid())
    fail(errc::grid_mismatch, "transparency_error: propagation grids differ");
  if (U.ygrid_full != u.field.ygrid())
    fail(errc::grid_mismatch, "transparency_error: transverse grids differ");
  const std::size_t half = U.ygrid_full.size() / 2;
  const double dy = U.ygrid_full.spacing();

  double max_err = 0.0, max_ref = 0.0;
  for (std::size_t ix = 0; ix < U.field.xgrid().size(); ++ix) {
    const auto qrow = U.field.row(ix);
    const auto hrow = u.field.row(ix);
    double err = 0.0, ref = 0.0;
    for (std::size_t m = 0; m < half; ++m) {
      err += std::norm(qrow[m] - hrow[half + m]);
      ref += std::norm(hrow[half + m]);
    }
    max_err = std::max(max_err, err * dy);
    max_ref = std::max(max_ref, ref * dy);
  }
  if (max_ref == 0.0) return std::sqrt(max_err);
  return std::sqrt(max_err / max_ref);
}

bool DecayTable::satisfies(double tol) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i].err <= rows[i].bound * (1.0 + tol))) return false;
    if (i > 0 && !(rows[i].err <= rows[i - 1].err * (1.0 + tol))) return false;
  }
  return true;
}

DecayTable absorbing_decay(const BoundaryData& h,
                           std::span<const double> shifts, const Grid1D& xgrid,
                           const PhysicalParams& p, unsigned threads) {
  validate_params(p);
  p.require_nonzero_ky("absorbing_decay");
  if (p.ky > 0.0)
    fail(errc::wrong_sign_ky,
         "absorbing_decay studies the ky < 0 orientation");
  if (h.kind != BoundaryKind::g_plus)
    fail(errc::invalid_argument,
         "absorbing_decay expects a datum of kind g_plus");

  const std::size_t n = h.grid.size();
  const std::size_t half = n / 2;
  const double dy = h.grid.spacing();

  const Spectrum hhat = forward_dft(h.samples, h.grid);
  SymbolTable table(p, hhat.grid);
  std::vector<cplx> mh(n);
  for (std::size_t k = 0; k < n; ++k)
    mh[k] = table.m_entrance()[k] * hhat.coeffs[k];
  const std::vector<cplx> H = inverse_dft(Spectrum(hhat.grid, mh));

  DecayTable out;
  for (const cplx& v : table.k_hat())
    out.c_k = std::max(out.c_k, std::abs(v));

  for (double A : shifts) {
    const auto kshift = static_cast<std::ptrdiff_t>(std::llround(A / dy));
    if (kshift < 1 || static_cast<std::size_t>(kshift) >= half)
      fail(errc::invalid_argument,
           "absorbing_decay: shift must land in (0, n/2) grid steps");
    const std::size_t ks = static_cast<std::size_t>(kshift);
    const double a_eff = static_cast<double>(ks) * dy;

    // Translated datum: exact circular rotation (integer number of bins).
    std::vector<cplx> rotated(n);
    for (std::size_t m = 0; m < n; ++m) rotated[m] = h.samples[(m + n - ks) % n];
    const BoundaryData shifted_q(h.grid, rotated, BoundaryKind::g_plus, 0.0);
    const BoundaryData shifted_h(h.grid, std::move(rotated), BoundaryKind::g,
                                 -std::numeric_limits<double>::infinity());

    const QuadrantSolution q = solve_quadrant(shifted_q, xgrid, p, threads);
    const HalfSpaceSolution full = solve_halfspace(shifted_h, xgrid, p, threads);

    double err_sq = 0.0;
    for (std::size_t ix = 0; ix < xgrid.size(); ++ix) {
      const auto qrow = q.field.row(ix);
      const auto frow = full.field.row(ix);
      double e = 0.0;
      for (std::size_t m = 0; m < half; ++m)
        e += std::norm(qrow[m] - frow[half + m]);
      err_sq = std::max(err_sq, e * dy);
    }

    double tail_sq = 0.0;  // || H 1_{y < -A} ||^2: bins m < n/2 - ks
    for (std::size_t m = 0; m + ks < half; ++m) tail_sq += std::norm(H[m]);
    tail_sq *= dy;

    out.rows.push_back(
        DecayRow{a_eff, std::sqrt(err_sq), out.c_k * std::sqrt(tail_sq)});
  }
  return out;
}

double paraxiality_measure(const HalfSpaceSolution& sol,
                           const PhysicalParams& p) {
  validate_params(p);
  const Grid1D& xg = sol.field.xgrid();
  const SpectralGrid& sg = sol.trace_hat.grid;
  const std::size_t n = sol.trace_hat.coeffs.size();

  double num = 0.0, den = 0.0;
  for (std::size_t ix = 0; ix < xg.size(); ++ix) {
    const double wx = (ix == 0 || ix + 1 == xg.size()) ? 0.5 : 1.0;
    const double x = xg.point(ix);
    for (std::size_t k = 0; k < n; ++k) {
      const double eta = sg.frequency(k);
      const cplx rm = r_pm(eta, -1, p);
      const double amp =
          std::norm(sol.trace_hat.coeffs[k] * std::exp(rm * x));
      // k . grad acts per mode as kx R_- + ky (i eta).
      num += wx * std::norm(p.kx * rm + cplx{0.0, p.ky * eta}) * amp;
      den += wx * amp;
    }
  }
  if (den == 0.0) return 0.0;
  return std::sqrt(num / den);
}

double hardy_support_check(const BoundaryData& trace,
                           const PhysicalParams& p) {
  validate_params(p);
  p.require_nonzero_ky("hardy_support_check");
  if (p.ky < 0.0)
    fail(errc::wrong_sign_ky,
         "hardy_support_check applies to the ky > 0 orientation");
  double below = 0.0, all = 0.0;
  for (std::size_t m = 0; m < trace.grid.size(); ++m) {
    const double v = std::norm(trace.samples[m]);
    all += v;
    if (trace.grid.point(m) < 0.0) below += v;
  }
  if (all == 0.0) return 0.0;
  return std::sqrt(below / all);
}

double weighted_spectrum_norms(const BoundaryData& g, const PhysicalParams& p,
                               double s, unsigned m) {
  validate_params(p);
  p.require_nonzero_ky("weighted_spectrum_norms");
  const Spectrum ghat = forward_dft(g.samples, g.grid);
  const double W = ghat.grid.spacing() / (2.0 * pi);
  double sum = 0.0;
  for (std::size_t k = 0; k < ghat.coeffs.size(); ++k) {
    const double eta = ghat.grid.frequency(k);
    const cplx rm = r_pm(eta, -1, p);
    sum += std::norm(ghat.coeffs[k]) * std::pow(1.0 + eta * eta, s) *
           std::pow(std::abs(rm), 2.0 * static_cast<double>(m)) /
           std::abs(rm.real());
  }
  return sum * W;
}

}  // namespace oparax
