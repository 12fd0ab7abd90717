#pragma once

#include <string>

namespace skyplan {

enum class CoordinateSystem { Planar, Geographic };

// A point on the plane (x/y in km) or on the globe (x = longitude deg,
// y = latitude deg). Both problems share one type; the system tag decides
// which distance applies.
struct Location {
  double x = 0.0;
  double y = 0.0;
  CoordinateSystem system = CoordinateSystem::Planar;

  double lon() const { return x; }
  double lat() const { return y; }
};

Location planar_point(double x, double y);
Location geographic_point(double lat_deg, double lon_deg);

// Euclidean for planar points, great-circle (mean Earth radius 6371 km)
// for geographic ones. Mixing systems is a programming error and throws.
double distance_km(const Location& a, const Location& b);

std::string to_string(CoordinateSystem system);
CoordinateSystem coordinate_system_from_string(const std::string& token);

}  // namespace skyplan
