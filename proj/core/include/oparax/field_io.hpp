#ifndef OPARAX_FIELD_IO_HPP
#define OPARAX_FIELD_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oparax/diagnostics.hpp"
#include "oparax/field.hpp"

namespace oparax {

// CPF1 container: complex field, little-endian regardless of host.
//
//   offset  size  content
//   0       4     magic "CPF1"
//   4       4     u32 nx
//   8       4     u32 ny
//   12      48    f64 x0, dx, y0, dy, reserved0, reserved1 (reserved = 0)
//   60      16*nx*ny   (f64 re, f64 im) pairs, x-major
//
// Round trips are bit-exact (including signed zeros).
void write_field(const ComplexField2D& f, const std::string& path);
ComplexField2D read_field(const std::string& path);

// nx = 1 CPF1 carrying a boundary profile on a y-line (x0 = 0, dx = 1 by
// convention in the header's x slots).
struct Profile {
  std::uint32_t ny = 0;
  double y0 = 0.0;
  double dy = 0.0;
  std::vector<cplx> samples;
};
void write_profile(std::span<const cplx> samples, const Grid1D& ygrid,
                   const std::string& path);
Profile read_profile(const std::string& path);

// CSV with %.17g columns (numbers re-parse to the original doubles).
// Slice rows: x,y,re,im,abs. Decay rows: A,err,bound.
void export_csv(const ComplexField2D& f, std::size_t ix,
                const std::string& path);
void export_csv(const DecayTable& table, const std::string& path);

}  // namespace oparax

#endif
