#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "lozimax/core_maps.hpp"

namespace lozimax {

/// `n,x,y` header, LF line endings. Floats use 17 significant digits,
/// rationals are written as num/den.
void write_orbit_csv(std::ostream& out, const Orbit& orbit);
void write_orbit_csv(std::ostream& out, const RationalOrbit& orbit);
void write_points_csv(std::ostream& out, std::span<const PlanarPoint> points);

std::string format_double(double v);

}  // namespace lozimax
