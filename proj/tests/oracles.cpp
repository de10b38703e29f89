#include "oracles.hpp"

#include <mpfr.h>

#include <cstdio>
#include <cstdlib>

namespace oracles {

namespace {

constexpr mpfr_prec_t kPrec = 256;

//----------------------------------------------------------------------------
// Minimal RAII complex on mpfr_t. Only what the symbol definitions need.
//----------------------------------------------------------------------------
class MC {
 public:
  MC() {
    mpfr_init2(re_, kPrec);
    mpfr_init2(im_, kPrec);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
  }
  MC(double re, double im) : MC() {
    mpfr_set_d(re_, re, MPFR_RNDN);
    mpfr_set_d(im_, im, MPFR_RNDN);
  }
  MC(const MC& o) : MC() {
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
  }
  MC& operator=(const MC& o) {
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    return *this;
  }
  ~MC() {
    mpfr_clear(re_);
    mpfr_clear(im_);
  }

  MC operator+(const MC& o) const {
    MC r;
    mpfr_add(r.re_, re_, o.re_, MPFR_RNDN);
    mpfr_add(r.im_, im_, o.im_, MPFR_RNDN);
    return r;
  }
  MC operator-(const MC& o) const {
    MC r;
    mpfr_sub(r.re_, re_, o.re_, MPFR_RNDN);
    mpfr_sub(r.im_, im_, o.im_, MPFR_RNDN);
    return r;
  }
  MC operator*(const MC& o) const {
    MC r;
    mpfr_t t1, t2;
    mpfr_inits2(kPrec, t1, t2, static_cast<mpfr_ptr>(nullptr));
    // re = a c - b d
    mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
    mpfr_sub(r.re_, t1, t2, MPFR_RNDN);
    // im = a d + b c
    mpfr_mul(t1, re_, o.im_, MPFR_RNDN);
    mpfr_mul(t2, im_, o.re_, MPFR_RNDN);
    mpfr_add(r.im_, t1, t2, MPFR_RNDN);
    mpfr_clears(t1, t2, static_cast<mpfr_ptr>(nullptr));
    return r;
  }
  MC operator/(const MC& o) const {
    MC r;
    mpfr_t t1, t2, den;
    mpfr_inits2(kPrec, t1, t2, den, static_cast<mpfr_ptr>(nullptr));
    mpfr_mul(t1, o.re_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, o.im_, o.im_, MPFR_RNDN);
    mpfr_add(den, t1, t2, MPFR_RNDN);
    // re = (a c + b d) / den
    mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(r.re_, t1, den, MPFR_RNDN);
    // im = (b c - a d) / den
    mpfr_mul(t1, im_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, re_, o.im_, MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_div(r.im_, t1, den, MPFR_RNDN);
    mpfr_clears(t1, t2, den, static_cast<mpfr_ptr>(nullptr));
    return r;
  }

  // Principal square root, stable in every quadrant:
  //   x >= 0:  re = sqrt((|z|+x)/2),        im = y / (2 re)
  //   x <  0:  im = sgn(y) sqrt((|z|-x)/2), re = y / (2 im)
  MC sqrt() const {
    MC r;
    mpfr_t hyp, t;
    mpfr_inits2(kPrec, hyp, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_hypot(hyp, re_, im_, MPFR_RNDN);
    if (mpfr_sgn(re_) >= 0) {
      mpfr_add(t, hyp, re_, MPFR_RNDN);
      mpfr_div_ui(t, t, 2, MPFR_RNDN);
      mpfr_sqrt(r.re_, t, MPFR_RNDN);
      mpfr_mul_ui(t, r.re_, 2, MPFR_RNDN);
      mpfr_div(r.im_, im_, t, MPFR_RNDN);
    } else {
      if (mpfr_zero_p(im_)) {
        std::fprintf(stderr, "oracle sqrt on the branch cut\n");
        std::abort();
      }
      mpfr_sub(t, hyp, re_, MPFR_RNDN);
      mpfr_div_ui(t, t, 2, MPFR_RNDN);
      mpfr_sqrt(r.im_, t, MPFR_RNDN);
      if (mpfr_sgn(im_) < 0) mpfr_neg(r.im_, r.im_, MPFR_RNDN);
      mpfr_mul_ui(t, r.im_, 2, MPFR_RNDN);
      mpfr_div(r.re_, im_, t, MPFR_RNDN);
    }
    mpfr_clears(hyp, t, static_cast<mpfr_ptr>(nullptr));
    return r;
  }

  double abs2_double() const {
    mpfr_t t1, t2;
    mpfr_inits2(kPrec, t1, t2, static_cast<mpfr_ptr>(nullptr));
    mpfr_mul(t1, re_, re_, MPFR_RNDN);
    mpfr_mul(t2, im_, im_, MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    const double v = mpfr_get_d(t1, MPFR_RNDN);
    mpfr_clears(t1, t2, static_cast<mpfr_ptr>(nullptr));
    return v;
  }

  std::complex<double> to_double() const {
    return {mpfr_get_d(re_, MPFR_RNDN), mpfr_get_d(im_, MPFR_RNDN)};
  }

 private:
  mpfr_t re_;
  mpfr_t im_;
};

MC s_root_mp(double eta, const Params& p) {
  const MC one(1.0, 0.0);
  const MC lin(-2.0 * p.epsilon * p.ky * eta / (p.kx * p.kx), 0.0);
  const MC damp(0.0, 2.0 * p.nu * p.epsilon * p.ky * p.ky / (p.kx * p.kx));
  return (one + lin + damp).sqrt();
}

MC s2_root_mp(double xi, const Params& p) {
  const MC one(1.0, 0.0);
  const MC lin(-2.0 * p.epsilon * p.kx * xi / (p.ky * p.ky), 0.0);
  const MC damp(0.0, 2.0 * p.epsilon * p.nu * p.kx * p.kx / (p.ky * p.ky));
  return (one + lin + damp).sqrt();
}

MC r_pm_mp(double eta, int sign, const Params& p) {
  const MC s = s_root_mp(eta, p);
  const MC drift(0.0, p.kx / p.ky * eta);
  const MC scale(0.0, -p.kx / (p.epsilon * p.ky * p.ky));
  const MC one(1.0, 0.0);
  const MC pm(sign > 0 ? 1.0 : -1.0, 0.0);
  return drift + scale * (one + pm * s);
}

}  // namespace

std::complex<double> s_root(double eta, const Params& p) {
  return s_root_mp(eta, p).to_double();
}

std::complex<double> r_pm(double eta, int sign, const Params& p) {
  return r_pm_mp(eta, sign, p).to_double();
}

std::complex<double> a_pm(double xi, int sign, const Params& p) {
  const MC s2 = s2_root_mp(xi, p);
  const MC drift(0.0, p.ky / p.kx * xi);
  const MC scale(0.0, -p.ky / (p.epsilon * p.kx * p.kx));
  const MC one(1.0, 0.0);
  const MC pm(sign > 0 ? 1.0 : -1.0, 0.0);
  return (drift + scale * (one + pm * s2)).to_double();
}

std::complex<double> m_entrance(double eta, const Params& p) {
  const MC two(2.0, 0.0);
  const MC one(1.0, 0.0);
  return (two / (one + s_root_mp(eta, p))).to_double();
}

std::complex<double> k_hat(double eta, const Params& p) {
  const MC rm = r_pm_mp(eta, -1, p);
  const MC rp = r_pm_mp(eta, +1, p);
  const MC drift(0.0, p.kx / p.ky * eta);
  const MC zero(0.0, 0.0);
  const MC ratio = (zero - (rm - drift)) / (rp - rm);

  const MC one(1.0, 0.0);
  const MC half(0.5, 0.0);
  const MC alt = half * (one - one / s_root_mp(eta, p));

  if ((ratio - alt).abs2_double() > 1e-120) {
    std::fprintf(stderr, "oracle k_hat: the two forms disagree\n");
    std::abort();
  }
  return ratio.to_double();
}

std::complex<double> char_poly(double xi, double eta, const Params& p) {
  const MC ixi(0.0, xi);
  const MC ieta(0.0, eta);
  const MC adv = MC(p.kx, 0.0) * ixi + MC(p.ky, 0.0) * ieta;
  const MC iadv = MC(0.0, 1.0) * adv;
  const MC lap = MC(p.ky * p.ky, 0.0) * ixi * ixi -
                 MC(2.0 * p.kx * p.ky, 0.0) * ixi * ieta +
                 MC(p.kx * p.kx, 0.0) * ieta * ieta;
  return (iadv + MC(0.5 * p.epsilon, 0.0) * lap + MC(0.0, p.nu)).to_double();
}

}  // namespace oracles
