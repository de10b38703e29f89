#ifndef OPARAX_PARAMS_HPP
#define OPARAX_PARAMS_HPP

#include "oparax/errors.hpp"

namespace oparax {

// Physical parameters of the tilted-frame propagation problem.
//
//   epsilon : paraxial (inverse wave-number) scale, > 0
//   kx, ky  : unit propagation direction; kx > 0 points into the domain
//   nu      : absorption coefficient, > 0
//
// ky = 0 (normal incidence) is representable but every operation that divides
// by ky rejects it; the aligned-frame problem is out of scope here.
struct PhysicalParams {
  double epsilon = 0.0;
  double kx = 0.0;
  double ky = 0.0;
  double nu = 0.0;

  static PhysicalParams from_direction(double epsilon, double kx, double ky,
                                       double nu);
  // theta in (-pi/2, pi/2): kx = cos(theta), ky = sin(theta).
  static PhysicalParams from_angle(double epsilon, double theta, double nu);

  bool zero_ky() const { return ky == 0.0; }

  // Throws zero_ky with the caller's operation name in the message.
  void require_nonzero_ky(const char* what) const;
};

// Checks all invariants and returns p unchanged. ky = 0 passes (flagged via
// PhysicalParams::zero_ky, fatal only in the operations that need 1/ky).
PhysicalParams validate_params(const PhysicalParams& p);

}  // namespace oparax

#endif
