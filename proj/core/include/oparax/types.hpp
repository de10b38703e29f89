#ifndef OPARAX_TYPES_HPP
#define OPARAX_TYPES_HPP

#include <complex>
#include <numbers>

namespace oparax {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx iu{0.0, 1.0};  // imaginary unit

}  // namespace oparax

#endif
