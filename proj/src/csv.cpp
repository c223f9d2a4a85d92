#include "lozimax/csv.hpp"

#include <cstdio>
#include <ostream>

namespace lozimax {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_points_csv(std::ostream& out, std::span<const PlanarPoint> points) {
  out << "n,x,y\n";
  std::size_t n = 0;
  for (const auto& p : points) {
    out << n++ << ',' << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
}

void write_orbit_csv(std::ostream& out, const Orbit& orbit) {
  write_points_csv(out, orbit.points);
}

void write_orbit_csv(std::ostream& out, const RationalOrbit& orbit) {
  out << "n,x,y\n";
  std::size_t n = 0;
  for (const auto& p : orbit.points) {
    out << n++ << ',' << to_string(p.x) << ',' << to_string(p.y) << '\n';
  }
}

}  // namespace lozimax
