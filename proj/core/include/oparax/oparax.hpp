#ifndef OPARAX_OPARAX_HPP
#define OPARAX_OPARAX_HPP

// Umbrella header for the tilted-frame paraxial solver library.

#include "oparax/config.hpp"
#include "oparax/diagnostics.hpp"
#include "oparax/dft.hpp"
#include "oparax/errors.hpp"
#include "oparax/field.hpp"
#include "oparax/field_io.hpp"
#include "oparax/fractional.hpp"
#include "oparax/grid.hpp"
#include "oparax/halfspace.hpp"
#include "oparax/parallel.hpp"
#include "oparax/params.hpp"
#include "oparax/quadrant.hpp"
#include "oparax/symbols.hpp"
#include "oparax/types.hpp"

#endif
