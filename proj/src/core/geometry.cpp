#include "core/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "util/error.hpp"

namespace skyplan {

namespace {
constexpr double kEarthRadiusKm = 6371.0;
constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }
}  // namespace

Location planar_point(double x, double y) {
  return Location{x, y, CoordinateSystem::Planar};
}

Location geographic_point(double lat_deg, double lon_deg) {
  return Location{lon_deg, lat_deg, CoordinateSystem::Geographic};
}

double distance_km(const Location& a, const Location& b) {
  if (a.system != b.system) {
    throw std::invalid_argument(
        "distance_km: locations use different coordinate systems");
  }
  if (a.system == CoordinateSystem::Planar) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
  }
  const double lat1 = deg_to_rad(a.lat());
  const double lat2 = deg_to_rad(b.lat());
  const double dlat = lat2 - lat1;
  const double dlon = deg_to_rad(b.lon() - a.lon());
  const double s1 = std::sin(dlat / 2.0);
  const double s2 = std::sin(dlon / 2.0);
  const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

std::string to_string(CoordinateSystem system) {
  return system == CoordinateSystem::Planar ? "planar" : "geographic";
}

CoordinateSystem coordinate_system_from_string(const std::string& token) {
  if (token == "planar") return CoordinateSystem::Planar;
  if (token == "geographic") return CoordinateSystem::Geographic;
  throw ParseError("unknown coordinate system '" + token + "'");
}

}  // namespace skyplan
