#include "route/routing.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "util/error.hpp"
#include "util/random.hpp"
#include "util/text.hpp"

namespace skyplan {

namespace {

void require_leg(double d, double payload, const DroneSpec& drone,
                 const char* what) {
  if (!leg_feasible(d, payload, drone)) {
    throw std::invalid_argument(std::string(what) + " leg of " +
                                format_double(d) + " km cannot fly at " +
                                format_double(payload) + " kg");
  }
}

}  // namespace

bool chain_feasible(const Task& drop_task, const Task& pickup_task,
                    const Depot& depot, const DroneSpec& drone) {
  const double out = distance_km(depot.location, drop_task.location);
  const double mid = distance_km(drop_task.location, pickup_task.location);
  const double back = distance_km(pickup_task.location, depot.location);
  return leg_feasible(out, drop_task.drop_weight_kg, drone) &&
         leg_feasible(mid, 0.0, drone) &&
         leg_feasible(back, pickup_task.pickup_weight_kg, drone);
}

Sortie make_single_sortie(const Task& task, const Depot& depot,
                          const DroneSpec& drone) {
  const double d = distance_km(depot.location, task.location);
  Sortie s;
  s.depot_id = depot.id;
  s.distance_km = 2.0 * d;
  double out_kg = 0.0;
  double back_kg = 0.0;
  switch (task.kind) {
    case TaskKind::Drop:
      s.pattern = RoutePattern::DropOnly;
      out_kg = task.drop_weight_kg;
      break;
    case TaskKind::Pickup:
      s.pattern = RoutePattern::PickupOnly;
      back_kg = task.pickup_weight_kg;
      break;
    case TaskKind::PickDrop:
      s.pattern = RoutePattern::PickDropSame;
      out_kg = task.drop_weight_kg;
      back_kg = task.pickup_weight_kg;
      break;
  }
  require_leg(d, out_kg, drone, "outbound");
  require_leg(d, back_kg, drone, "return");
  s.legs = {Leg{depot.id, task.id, out_kg}, Leg{task.id, depot.id, back_kg}};
  return s;
}

Sortie make_chain_sortie(const Task& drop_task, const Task& pickup_task,
                         const Depot& depot, const DroneSpec& drone) {
  const double out = distance_km(depot.location, drop_task.location);
  const double mid = distance_km(drop_task.location, pickup_task.location);
  const double back = distance_km(pickup_task.location, depot.location);
  require_leg(out, drop_task.drop_weight_kg, drone, "outbound");
  require_leg(mid, 0.0, drone, "transfer");
  require_leg(back, pickup_task.pickup_weight_kg, drone, "return");
  Sortie s;
  s.depot_id = depot.id;
  s.pattern = RoutePattern::DropThenPickup;
  s.distance_km = out + mid + back;
  s.legs = {Leg{depot.id, drop_task.id, drop_task.drop_weight_kg},
            Leg{drop_task.id, pickup_task.id, 0.0},
            Leg{pickup_task.id, depot.id, pickup_task.pickup_weight_kg}};
  return s;
}

namespace {

// Order-driven walk of one depot's task list; the chaining coin is the
// only rng consumption.
DepotPlan walk_depot(const Depot& depot, const std::vector<int>& order,
                     const Instance& instance, const NodeLookup& lookup,
                     std::mt19937_64& rng) {
  DepotPlan plan;
  plan.depot_id = depot.id;
  const Task* prev = nullptr;
  for (const int id : order) {
    const Task& task = lookup.task(id);
    if (task.kind == TaskKind::Pickup && prev != nullptr &&
        prev->kind == TaskKind::Drop && uniform_unit(rng) < 0.5 &&
        chain_feasible(*prev, task, depot, instance.drone)) {
      plan.sorties.back() =
          make_chain_sortie(*prev, task, depot, instance.drone);
    } else {
      plan.sorties.push_back(make_single_sortie(task, depot, instance.drone));
    }
    prev = &task;
  }
  return plan;
}

}  // namespace

Schedule erpa_single(const AllocationScheme& scheme, const Instance& instance,
                     const NodeLookup& lookup, std::mt19937_64& rng) {
  if (scheme.groups.size() != instance.depots.size()) {
    throw std::invalid_argument(
        "allocation scheme does not match the instance's depot count");
  }
  Schedule schedule;
  schedule.depot_plans.reserve(instance.depots.size());
  for (std::size_t k = 0; k < instance.depots.size(); ++k) {
    schedule.depot_plans.push_back(
        walk_depot(instance.depots[k], scheme.groups[k], instance, lookup,
                   rng));
  }
  return schedule;
}

Schedule erpa_single(const AllocationScheme& scheme, const Instance& instance,
                     std::mt19937_64& rng) {
  const NodeLookup lookup(instance);
  return erpa_single(scheme, instance, lookup, rng);
}

Schedule erpa(const AllocationScheme& scheme, const Instance& instance,
              std::mt19937_64& rng, int n_starts) {
  if (n_starts < 1) {
    throw std::invalid_argument("erpa needs at least one start");
  }
  const NodeLookup lookup(instance);
  std::vector<std::uint64_t> seeds;
  seeds.reserve(static_cast<std::size_t>(n_starts));
  for (int i = 0; i < n_starts; ++i) seeds.push_back(rng());
  Schedule best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (const std::uint64_t seed : seeds) {
    std::mt19937_64 sub(seed);
    AllocationScheme shuffled = scheme;
    for (std::vector<int>& group : shuffled.groups) shuffle_vec(group, sub);
    Schedule attempt = erpa_single(shuffled, instance, lookup, sub);
    const double cost = cached_cost(attempt, instance.weights);
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(attempt);
    }
  }
  return best;
}

Schedule erpa_rebuild(const AllocationScheme& scheme,
                      const AllocationScheme& previous,
                      const Schedule& previous_routes, const Instance& instance,
                      const NodeLookup& lookup) {
  const std::size_t m = instance.depots.size();
  if (scheme.groups.size() != m || previous.groups.size() != m ||
      previous_routes.depot_plans.size() != m) {
    throw std::invalid_argument(
        "scheme and route shapes do not match the instance's depot count");
  }
  Schedule schedule;
  schedule.depot_plans.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (scheme.groups[k] == previous.groups[k]) {
      schedule.depot_plans.push_back(previous_routes.depot_plans[k]);
      continue;
    }
    const Depot& depot = instance.depots[k];
    std::vector<int> raw;
    raw.reserve(scheme.groups[k].size() + 2);
    raw.push_back(depot.id);
    raw.insert(raw.end(), scheme.groups[k].begin(), scheme.groups[k].end());
    raw.push_back(depot.id);
    DepotPlan plan;
    plan.depot_id = depot.id;
    plan.sorties = repair(raw, instance, lookup);
    schedule.depot_plans.push_back(std::move(plan));
  }
  return schedule;
}

std::vector<Sortie> repair(const std::vector<int>& raw_route,
                           const Instance& instance,
                           const NodeLookup& lookup) {
  if (raw_route.size() < 2) {
    throw std::invalid_argument("route needs at least a departure and return");
  }
  const Depot* depot_ptr = lookup.find_depot(raw_route.front());
  if (raw_route.front() != raw_route.back() || depot_ptr == nullptr) {
    throw std::invalid_argument(
        "route must start and end at the same depot");
  }
  const Depot& depot = *depot_ptr;
  std::vector<const Task*> pending;
  for (std::size_t i = 1; i + 1 < raw_route.size(); ++i) {
    if (lookup.find_depot(raw_route[i]) != nullptr) {
      pending.push_back(nullptr);  // explicit depot visit forces a cut
    } else {
      pending.push_back(&lookup.task(raw_route[i]));
    }
  }
  std::vector<Sortie> sorties;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Task* task = pending[i];
    if (task == nullptr) continue;
    if (!round_trip_feasible(*task, depot, instance.drone)) {
      throw ValidationError("task " + std::to_string(task->id) +
                            " cannot be served from depot " +
                            std::to_string(depot.id) + " even by itself");
    }
    const Task* next = i + 1 < pending.size() ? pending[i + 1] : nullptr;
    if (task->kind == TaskKind::Drop && next != nullptr &&
        next->kind == TaskKind::Pickup &&
        round_trip_feasible(*next, depot, instance.drone) &&
        chain_feasible(*task, *next, depot, instance.drone)) {
      sorties.push_back(
          make_chain_sortie(*task, *next, depot, instance.drone));
      ++i;
    } else {
      sorties.push_back(make_single_sortie(*task, depot, instance.drone));
    }
  }
  return sorties;
}

std::vector<Sortie> repair(const std::vector<int>& raw_route,
                           const Instance& instance) {
  const NodeLookup lookup(instance);
  return repair(raw_route, instance, lookup);
}

Schedule local_search(const Schedule& schedule, const Instance& instance,
                      std::mt19937_64& rng) {
  if (schedule.depot_plans.empty()) return schedule;
  const std::size_t k = uniform_index(rng, schedule.depot_plans.size());
  const DepotPlan& plan = schedule.depot_plans[k];
  std::vector<std::size_t> drops;
  std::vector<std::size_t> pickups;
  for (std::size_t i = 0; i < plan.sorties.size(); ++i) {
    if (plan.sorties[i].pattern == RoutePattern::DropOnly) {
      drops.push_back(i);
    } else if (plan.sorties[i].pattern == RoutePattern::PickupOnly) {
      pickups.push_back(i);
    }
  }
  if (drops.empty() || pickups.empty()) return schedule;
  const std::size_t di = drops[uniform_index(rng, drops.size())];
  const std::size_t pi = pickups[uniform_index(rng, pickups.size())];
  const Depot& depot = instance.depot_by_id(plan.depot_id);
  const Task& drop_task =
      instance.task_by_id(plan.sorties[di].legs[0].to);
  const Task& pickup_task =
      instance.task_by_id(plan.sorties[pi].legs[0].to);
  if (!chain_feasible(drop_task, pickup_task, depot, instance.drone)) {
    return schedule;
  }
  Schedule next = schedule;
  DepotPlan& target = next.depot_plans[k];
  target.sorties[di] =
      make_chain_sortie(drop_task, pickup_task, depot, instance.drone);
  target.sorties.erase(target.sorties.begin() +
                       static_cast<std::ptrdiff_t>(pi));
  return next;
}

}  // namespace skyplan
