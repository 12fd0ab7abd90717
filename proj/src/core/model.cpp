#include "core/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "util/error.hpp"
#include "util/text.hpp"

namespace skyplan {

std::string to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::Drop:
      return "drop";
    case TaskKind::Pickup:
      return "pickup";
    case TaskKind::PickDrop:
      return "pickdrop";
  }
  throw std::logic_error("unreachable task kind");
}

TaskKind task_kind_from_string(const std::string& token) {
  if (token == "drop") return TaskKind::Drop;
  if (token == "pickup") return TaskKind::Pickup;
  if (token == "pickdrop") return TaskKind::PickDrop;
  throw ParseError("unknown task kind '" + token + "'");
}

const Task& Instance::task_by_id(int id) const {
  for (const Task& t : tasks) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("no task with id " + std::to_string(id));
}

const Depot& Instance::depot_by_id(int id) const {
  for (const Depot& d : depots) {
    if (d.id == id) return d;
  }
  throw std::invalid_argument("no depot with id " + std::to_string(id));
}

bool Instance::is_depot_id(int id) const {
  return std::any_of(depots.begin(), depots.end(),
                     [id](const Depot& d) { return d.id == id; });
}

NodeLookup::NodeLookup(const Instance& instance) {
  tasks_.reserve(instance.tasks.size());
  for (const Task& t : instance.tasks) tasks_.emplace(t.id, &t);
  depots_.reserve(instance.depots.size());
  for (const Depot& d : instance.depots) depots_.emplace(d.id, &d);
}

const Task& NodeLookup::task(int id) const {
  const Task* t = find_task(id);
  if (t == nullptr) {
    throw std::invalid_argument("no task with id " + std::to_string(id));
  }
  return *t;
}

std::string to_string(RoutePattern pattern) {
  switch (pattern) {
    case RoutePattern::PickupOnly:
      return "pickup_only";
    case RoutePattern::DropOnly:
      return "drop_only";
    case RoutePattern::DropThenPickup:
      return "drop_then_pickup";
    case RoutePattern::PickDropSame:
      return "pick_drop_same";
  }
  throw std::logic_error("unreachable route pattern");
}

RoutePattern route_pattern_from_string(const std::string& token) {
  if (token == "pickup_only") return RoutePattern::PickupOnly;
  if (token == "drop_only") return RoutePattern::DropOnly;
  if (token == "drop_then_pickup") return RoutePattern::DropThenPickup;
  if (token == "pick_drop_same") return RoutePattern::PickDropSame;
  throw ParseError("unknown route pattern '" + token + "'");
}

std::vector<int> Sortie::node_sequence() const {
  std::vector<int> seq;
  if (legs.empty()) return seq;
  seq.push_back(legs.front().from);
  for (const Leg& leg : legs) seq.push_back(leg.to);
  return seq;
}

int Schedule::sortie_count() const {
  int n = 0;
  for (const DepotPlan& plan : depot_plans) {
    n += static_cast<int>(plan.sorties.size());
  }
  return n;
}

double Schedule::total_distance_km() const {
  double d = 0.0;
  for (const DepotPlan& plan : depot_plans) {
    for (const Sortie& s : plan.sorties) d += s.distance_km;
  }
  return d;
}

double payload_penalty(double weight_kg, const DroneSpec& drone) {
  if (weight_kg < 0.0 || weight_kg > drone.max_capacity_kg) {
    throw std::invalid_argument("payload " + format_double(weight_kg) +
                                " kg outside [0, capacity]");
  }
  return (drone.beta_max - 1.0) / drone.max_capacity_kg * weight_kg + 1.0;
}

double effective_range_km(double weight_kg, const DroneSpec& drone) {
  return drone.max_range_km / payload_penalty(weight_kg, drone);
}

bool leg_feasible(double distance_km, double payload_kg,
                  const DroneSpec& drone) {
  return distance_km <= effective_range_km(payload_kg, drone);
}

double heaviest_leg_weight(const Task& task) {
  switch (task.kind) {
    case TaskKind::Drop:
      return task.drop_weight_kg;
    case TaskKind::Pickup:
      return task.pickup_weight_kg;
    case TaskKind::PickDrop:
      return std::max(task.drop_weight_kg, task.pickup_weight_kg);
  }
  throw std::logic_error("unreachable task kind");
}

bool round_trip_feasible(const Task& task, const Depot& depot,
                         const DroneSpec& drone) {
  const double d = distance_km(task.location, depot.location);
  return leg_feasible(d, heaviest_leg_weight(task), drone);
}

double objective(const Schedule& schedule, const Instance& instance) {
  double total = 0.0;
  int sorties = 0;
  auto locate = [&instance](int id) -> const Location& {
    if (instance.is_depot_id(id)) return instance.depot_by_id(id).location;
    return instance.task_by_id(id).location;
  };
  for (const DepotPlan& plan : schedule.depot_plans) {
    for (const Sortie& s : plan.sorties) {
      ++sorties;
      for (const Leg& leg : s.legs) {
        total += distance_km(locate(leg.from), locate(leg.to));
      }
    }
  }
  return instance.weights.alpha * total + instance.weights.rho * sorties;
}

double cached_cost(const Schedule& schedule, const ObjectiveWeights& weights) {
  return weights.alpha * schedule.total_distance_km() +
         weights.rho * schedule.sortie_count();
}

void check_instance(const Instance& instance) {
  const DroneSpec& drone = instance.drone;
  if (!(drone.max_range_km > 0.0)) {
    throw ValidationError("drone max_range_km must be positive");
  }
  if (!(drone.max_capacity_kg > 0.0)) {
    throw ValidationError("drone max_capacity_kg must be positive");
  }
  if (!(drone.beta_max >= 1.0)) {
    throw ValidationError("drone beta_max must be at least 1");
  }
  if (instance.weights.alpha < 0.0 || instance.weights.alpha > 1.0 ||
      instance.weights.rho < 0.0 || instance.weights.rho > 1.0) {
    throw ValidationError("objective weights must lie in [0, 1]");
  }
  if (instance.depots.empty()) {
    throw ValidationError("instance has no depots");
  }
  if (instance.tasks.empty()) {
    throw ValidationError("instance has no tasks");
  }
  std::unordered_set<int> ids;
  for (const Depot& d : instance.depots) {
    if (!ids.insert(d.id).second) {
      throw ValidationError("duplicate id " + std::to_string(d.id));
    }
    if (d.location.system != instance.system) {
      throw ValidationError("depot " + std::to_string(d.id) +
                            " uses a different coordinate system");
    }
  }
  for (const Task& t : instance.tasks) {
    if (!ids.insert(t.id).second) {
      throw ValidationError("duplicate id " + std::to_string(t.id));
    }
    if (t.location.system != instance.system) {
      throw ValidationError("task " + std::to_string(t.id) +
                            " uses a different coordinate system");
    }
    auto check_weight = [&](double w, const char* label) {
      if (w < 0.0) {
        throw ValidationError("task " + std::to_string(t.id) + ": " + label +
                              " is negative");
      }
      if (w > drone.max_capacity_kg) {
        throw ValidationError("task " + std::to_string(t.id) + ": " + label +
                              " " + format_double(w) +
                              " kg exceeds drone capacity (C6)");
      }
    };
    check_weight(t.drop_weight_kg, "drop weight");
    check_weight(t.pickup_weight_kg, "pickup weight");
    if (t.kind != TaskKind::Pickup && t.drop_weight_kg <= 0.0) {
      throw ValidationError("task " + std::to_string(t.id) +
                            ": drop weight must be positive");
    }
    if (t.kind != TaskKind::Drop && t.pickup_weight_kg <= 0.0) {
      throw ValidationError("task " + std::to_string(t.id) +
                            ": pickup weight must be positive");
    }
    if (t.kind == TaskKind::Drop && t.pickup_weight_kg != 0.0) {
      throw ValidationError("task " + std::to_string(t.id) +
                            ": drop task must not carry a pickup weight");
    }
    if (t.kind == TaskKind::Pickup && t.drop_weight_kg != 0.0) {
      throw ValidationError("task " + std::to_string(t.id) +
                            ": pickup task must not carry a drop weight");
    }
    const bool reachable =
        std::any_of(instance.depots.begin(), instance.depots.end(),
                    [&](const Depot& d) {
                      return round_trip_feasible(t, d, drone);
                    });
    if (!reachable) {
      throw ValidationError("task " + std::to_string(t.id) +
                            " is unreachable from every depot");
    }
  }
}

}  // namespace skyplan
