#pragma once

// Fixture builders shared by the unit tests.

#include <string>
#include <vector>

#include "core/model.hpp"

namespace testutil {

inline skyplan::Depot depot(int id, double x, double y) {
  skyplan::Depot d;
  d.id = id;
  d.location = skyplan::planar_point(x, y);
  return d;
}

inline skyplan::Task drop_task(int id, double x, double y, double weight) {
  skyplan::Task t;
  t.id = id;
  t.location = skyplan::planar_point(x, y);
  t.kind = skyplan::TaskKind::Drop;
  t.drop_weight_kg = weight;
  return t;
}

inline skyplan::Task pickup_task(int id, double x, double y, double weight) {
  skyplan::Task t;
  t.id = id;
  t.location = skyplan::planar_point(x, y);
  t.kind = skyplan::TaskKind::Pickup;
  t.pickup_weight_kg = weight;
  return t;
}

inline skyplan::Task pickdrop_task(int id, double x, double y,
                                   double drop_weight, double pickup_weight) {
  skyplan::Task t;
  t.id = id;
  t.location = skyplan::planar_point(x, y);
  t.kind = skyplan::TaskKind::PickDrop;
  t.drop_weight_kg = drop_weight;
  t.pickup_weight_kg = pickup_weight;
  return t;
}

// Default drone (range 30, capacity 8, beta_max 2) and weights (0.9/0.1)
// unless overridden by the caller afterwards.
inline skyplan::Instance make_instance(std::vector<skyplan::Depot> depots,
                                       std::vector<skyplan::Task> tasks,
                                       double alpha = 0.9, double rho = 0.1) {
  skyplan::Instance instance;
  instance.name = "fixture";
  instance.system = skyplan::CoordinateSystem::Planar;
  instance.weights.alpha = alpha;
  instance.weights.rho = rho;
  instance.depots = std::move(depots);
  instance.tasks = std::move(tasks);
  return instance;
}

inline bool same_legs(const skyplan::Sortie& a, const skyplan::Sortie& b) {
  if (a.legs.size() != b.legs.size()) return false;
  for (std::size_t i = 0; i < a.legs.size(); ++i) {
    if (a.legs[i].from != b.legs[i].from || a.legs[i].to != b.legs[i].to ||
        a.legs[i].payload_kg != b.legs[i].payload_kg) {
      return false;
    }
  }
  return true;
}

inline bool same_schedule(const skyplan::Schedule& a,
                          const skyplan::Schedule& b) {
  if (a.depot_plans.size() != b.depot_plans.size()) return false;
  for (std::size_t k = 0; k < a.depot_plans.size(); ++k) {
    const auto& pa = a.depot_plans[k];
    const auto& pb = b.depot_plans[k];
    if (pa.depot_id != pb.depot_id || pa.sorties.size() != pb.sorties.size()) {
      return false;
    }
    for (std::size_t s = 0; s < pa.sorties.size(); ++s) {
      if (pa.sorties[s].pattern != pb.sorties[s].pattern ||
          pa.sorties[s].depot_id != pb.sorties[s].depot_id ||
          pa.sorties[s].distance_km != pb.sorties[s].distance_km ||
          !same_legs(pa.sorties[s], pb.sorties[s])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace testutil
