#include "instances/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "util/random.hpp"

namespace skyplan {

namespace {

constexpr int kMaxPlacementAttempts = 10000;

void check_params(const GenParams& p) {
  if (p.num_tasks < 1 || p.num_depots < 1) {
    throw std::invalid_argument("need at least one task and one depot");
  }
  if (!(p.area_km > 0.0)) {
    throw std::invalid_argument("area side must be positive");
  }
  if (!(p.weight_min_kg > 0.0) || p.weight_min_kg > p.weight_max_kg ||
      p.weight_max_kg > p.drone.max_capacity_kg) {
    throw std::invalid_argument(
        "weights must satisfy 0 < min <= max <= drone capacity");
  }
  if (p.p_drop < 0.0 || p.p_pickup < 0.0 || p.p_pickdrop < 0.0 ||
      std::abs(p.p_drop + p.p_pickup + p.p_pickdrop - 1.0) > 1e-9) {
    throw std::invalid_argument("kind mix must be nonnegative and sum to 1");
  }
  if (p.weights.alpha < 0.0 || p.weights.alpha > 1.0 ||
      p.weights.rho < 0.0 || p.weights.rho > 1.0) {
    throw std::invalid_argument("objective weights must lie in [0, 1]");
  }
}

}  // namespace

Instance generate(const GenParams& params) {
  check_params(params);
  std::mt19937_64 rng(params.seed);

  Instance instance;
  instance.system = CoordinateSystem::Planar;
  instance.drone = params.drone;
  instance.weights = params.weights;
  instance.name = params.name.empty()
                      ? "c" + std::to_string(params.num_tasks) + "-m" +
                            std::to_string(params.num_depots) + "-s" +
                            std::to_string(params.seed)
                      : params.name;

  auto coord = [&]() { return uniform_unit(rng) * params.area_km; };
  for (int i = 0; i < params.num_depots; ++i) {
    Depot depot;
    depot.id = params.num_tasks + 1 + i;
    const double x = coord();
    const double y = coord();
    depot.location = planar_point(x, y);
    instance.depots.push_back(depot);
  }

  for (int i = 0; i < params.num_tasks; ++i) {
    Task task;
    task.id = i + 1;
    bool placed = false;
    for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
      const double x = coord();
      const double y = coord();
      task.location = planar_point(x, y);
      const double u = uniform_unit(rng);
      task.kind = u < params.p_drop ? TaskKind::Drop
                  : u < params.p_drop + params.p_pickup ? TaskKind::Pickup
                                                        : TaskKind::PickDrop;
      task.drop_weight_kg = 0.0;
      task.pickup_weight_kg = 0.0;
      const double span = params.weight_max_kg - params.weight_min_kg;
      if (task.kind != TaskKind::Pickup) {
        task.drop_weight_kg = params.weight_min_kg + uniform_unit(rng) * span;
      }
      if (task.kind != TaskKind::Drop) {
        task.pickup_weight_kg =
            params.weight_min_kg + uniform_unit(rng) * span;
      }
      const bool reachable = [&] {
        for (const Depot& d : instance.depots) {
          if (round_trip_feasible(task, d, instance.drone)) return true;
        }
        return false;
      }();
      if (reachable) {
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw std::invalid_argument(
          "could not place task " + std::to_string(task.id) +
          ": the flying range reaches too little of the area");
    }
    instance.tasks.push_back(task);
  }
  return instance;
}

std::vector<SuiteConfig> builtin_suite() {
  return {
      {"C1", 40, 5},   {"C2", 60, 5},   {"C3", 80, 5},   {"C4", 100, 5},
      {"C5", 150, 5},  {"C6", 200, 5},  {"C7", 40, 2},   {"C8", 40, 4},
      {"C9", 60, 3},   {"C10", 80, 4},  {"C11", 100, 10}, {"C12", 150, 7},
      {"C13", 200, 10},
  };
}

}  // namespace skyplan
