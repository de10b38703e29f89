#include "oparax/symbols.hpp"

#include <cmath>
#include <sstream>

namespace oparax {

cplx principal_sqrt(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    std::ostringstream os;
    os << "principal square root undefined on the closed negative real axis"
       << " (z = " << z.real() << ")";
    fail(errc::branch_cut, os.str());
  }
  // std::sqrt returns the branch with Re >= 0; off the cut the real part is
  // strictly positive.
  return std::sqrt(z);
}

cplx root_argument_eta(double eta, const PhysicalParams& p) {
  const double kx2 = p.kx * p.kx;
  return cplx(1.0 - 2.0 * p.epsilon * p.ky * eta / kx2,
              2.0 * p.nu * p.epsilon * p.ky * p.ky / kx2);
}

cplx entrance_root(double eta, const PhysicalParams& p) {
  p.require_nonzero_ky("entrance_root");
  return principal_sqrt(root_argument_eta(eta, p));
}

cplx r_pm(double eta, int sign, const PhysicalParams& p) {
  p.require_nonzero_ky("r_pm");
  const cplx s = principal_sqrt(root_argument_eta(eta, p));
  const double b = p.kx / (p.epsilon * p.ky * p.ky);
  const cplx one_pm_s = sign > 0 ? 1.0 + s : 1.0 - s;
  return iu * (p.kx / p.ky) * eta - iu * b * one_pm_s;
}

cplx a_pm(double xi, int sign, const PhysicalParams& p) {
  p.require_nonzero_ky("a_pm");
  const double ky2 = p.ky * p.ky;
  const cplx arg(1.0 - 2.0 * p.epsilon * p.kx * xi / ky2,
                 2.0 * p.epsilon * p.nu * p.kx * p.kx / ky2);
  const cplx s = principal_sqrt(arg);
  const double b = p.ky / (p.epsilon * p.kx * p.kx);
  const cplx one_pm_s = sign > 0 ? 1.0 + s : 1.0 - s;
  return iu * (p.ky / p.kx) * xi - iu * b * one_pm_s;
}

cplx entrance_multiplier(double eta, const PhysicalParams& p) {
  p.require_nonzero_ky("entrance_multiplier");
  return 2.0 / (1.0 + principal_sqrt(root_argument_eta(eta, p)));
}

cplx k_hat(double eta, const PhysicalParams& p) {
  p.require_nonzero_ky("k_hat");
  const cplx rm = r_pm(eta, -1, p);
  const cplx rp = r_pm(eta, +1, p);
  return -(rm - iu * (p.kx / p.ky) * eta) / (rp - rm);
}

cplx g_hat(cplx gcoeff, double eta, const PhysicalParams& p) {
  p.require_nonzero_ky("g_hat");
  const cplx rm = r_pm(eta, -1, p);
  const cplx rp = r_pm(eta, +1, p);
  return -(2.0 * iu * p.kx / (p.epsilon * p.ky * p.ky)) * gcoeff / (rp - rm);
}

cplx characteristic_poly(double xi, double eta, const PhysicalParams& p) {
  const cplx ixi(0.0, xi);
  const cplx ieta(0.0, eta);
  return iu * (p.kx * ixi + p.ky * ieta) +
         0.5 * p.epsilon *
             (ixi * ixi * p.ky * p.ky - 2.0 * p.kx * p.ky * ixi * ieta +
              p.kx * p.kx * ieta * ieta) +
         iu * p.nu;
}

double stability_constant(const PhysicalParams& p) {
  p.require_nonzero_ky("stability_constant");
  return 2.0 * std::sqrt(1.0 + p.kx * p.kx / (p.epsilon * std::abs(p.ky)));
}

SymbolTable::SymbolTable(const PhysicalParams& params, const SpectralGrid& grid)
    : params_(validate_params(params)), grid_(grid) {
  params_.require_nonzero_ky("SymbolTable");
  const std::size_t n = grid.size();
  root_.resize(n);
  r_minus_.resize(n);
  r_plus_.resize(n);
  m_entrance_.resize(n);
  k_hat_.resize(n);

  for (std::size_t k = 0; k < n; ++k) {
    const double eta = grid.frequency(k);
    root_[k] = entrance_root(eta, params_);
    r_minus_[k] = r_pm(eta, -1, params_);
    r_plus_[k] = r_pm(eta, +1, params_);
    m_entrance_[k] = entrance_multiplier(eta, params_);
    k_hat_[k] = oparax::k_hat(eta, params_);
  }

  // Root-sign and kernel identities, checked on every bin.
  for (std::size_t k = 0; k < n; ++k) {
    const double eta = grid.frequency(k);
    if (!(r_minus_[k].real() < 0.0) || !(r_plus_[k].real() > 0.0)) {
      std::ostringstream os;
      os << "root signs violated at eta = " << eta;
      fail(errc::invalid_argument, os.str());
    }
    if (std::abs(r_minus_[k].real() + r_plus_[k].real()) > 1e-12) {
      std::ostringstream os;
      os << "Re R+ + Re R- = " << r_minus_[k].real() + r_plus_[k].real()
         << " at eta = " << eta;
      fail(errc::invalid_argument, os.str());
    }
    const cplx lhs = 1.0 - k_hat_[k];
    const cplx rhs = 0.5 * (1.0 + 1.0 / root_[k]);
    if (std::abs(lhs - rhs) > 1e-12) {
      std::ostringstream os;
      os << "kernel identity violated at eta = " << eta;
      fail(errc::invalid_argument, os.str());
    }
  }
}

}  // namespace oparax
