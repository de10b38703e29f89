#ifndef OPARAX_CONFIG_HPP
#define OPARAX_CONFIG_HPP

#include <string>

#include "oparax/grid.hpp"
#include "oparax/params.hpp"

namespace oparax {

// Parsed run configuration. Flat `key = value` text, `#` comments, dotted
// sections. Keys:
//
//   params.epsilon                 required, > 0
//   params.theta                   direction as an angle, exclusive with...
//   params.kx, params.ky           ...explicit components (unit vector)
//   params.nu                      required, > 0
//   grids.ny, grids.ly, grids.y0   transverse line: ny points, dy = ly/ny
//   grids.nx, grids.lx             propagation line: nx slices, dx = lx/nx
//   boundary.shape                 gaussian | file
//   boundary.center, .width        gaussian profile (width > 0)
//   boundary.amplitude             optional, default 1.0
//   boundary.shift_A               optional translation, default 0.0
//   boundary.path                  required iff shape = file (nx=1 CPF1)
//   outputs.field_path             optional CPF1 destination
//   outputs.csv_path               optional CSV destination
//   diagnostics.energy|stability|transparency|absorbing|paraxiality|
//     hardy|weighted               optional booleans, default true
//   run.threads                    optional, >= 1, default 1
//
// The boundary profile is the incoming envelope u_in; the solvers derive g
// from it. Unknown keys are errors; messages carry the offending line number.
struct RunConfig {
  PhysicalParams params;

  std::size_t ny = 0;
  double ly = 0.0;
  double y0 = 0.0;
  std::size_t nx = 0;
  double lx = 0.0;

  enum class Shape { gaussian, file };
  Shape shape = Shape::gaussian;
  double center = 0.0;
  double width = 0.0;
  double amplitude = 1.0;
  double shift_A = 0.0;
  std::string boundary_path;

  std::string field_path;
  std::string csv_path;

  bool diag_energy = true;
  bool diag_stability = true;
  bool diag_transparency = true;
  bool diag_absorbing = true;
  bool diag_paraxiality = true;
  bool diag_hardy = true;
  bool diag_weighted = true;

  unsigned threads = 1;

  Grid1D make_ygrid() const;  // (ny, y0, ly/ny)
  Grid1D make_xgrid() const;  // (nx, 0, lx/nx)
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);  // io_error + parse_config

}  // namespace oparax

#endif
