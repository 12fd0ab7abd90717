#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace skyplan {

// Random-instance recipe: uniform locations in an area_km x area_km
// square, task kinds from the mix probabilities, weights uniform in
// [weight_min_kg, weight_max_kg]. Tasks are numbered 1..c, depots c+1..c+m.
struct GenParams {
  int num_tasks = 40;
  int num_depots = 5;
  double area_km = 50.0;
  double weight_min_kg = 1.0;
  double weight_max_kg = 8.0;
  double p_drop = 1.0 / 3.0;
  double p_pickup = 1.0 / 3.0;
  double p_pickdrop = 1.0 / 3.0;
  DroneSpec drone;
  ObjectiveWeights weights;
  std::uint64_t seed = 1;
  std::string name;  // empty = derived from counts and seed
};

// Deterministic in seed. A task that no depot can serve is redrawn
// (location, kind and weights together) so the requested count is exact;
// parameters that leave no room for placements are an error.
Instance generate(const GenParams& params);

struct SuiteConfig {
  std::string label;
  int num_tasks = 0;
  int num_depots = 0;
};

// The 13 benchmark shapes, 40..200 tasks over 2..10 depots.
std::vector<SuiteConfig> builtin_suite();

}  // namespace skyplan
