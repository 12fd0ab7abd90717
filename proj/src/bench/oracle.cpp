#include "bench/oracle.hpp"

#include <limits>
#include <vector>

#include "route/routing.hpp"
#include "util/error.hpp"

namespace skyplan {

namespace {

constexpr std::size_t kMaxTasks = 6;
constexpr std::size_t kMaxDepots = 2;

struct DepotPlanChoice {
  bool feasible = false;
  double cost = std::numeric_limits<double>::infinity();
  std::vector<Sortie> sorties;
};

// Best plan for one depot's task set: pick-drops fly alone (the only valid
// pattern for them); drops and pickups are matched into chains over every
// feasible combination.
DepotPlanChoice best_depot_plan(const Instance& instance, const Depot& depot,
                                const std::vector<const Task*>& tasks) {
  DepotPlanChoice choice;
  const ObjectiveWeights& w = instance.weights;
  const DroneSpec& drone = instance.drone;

  std::vector<const Task*> drops;
  std::vector<const Task*> pickups;
  std::vector<const Task*> pickdrops;
  for (const Task* t : tasks) {
    if (!round_trip_feasible(*t, depot, drone)) return choice;
    switch (t->kind) {
      case TaskKind::Drop:
        drops.push_back(t);
        break;
      case TaskKind::Pickup:
        pickups.push_back(t);
        break;
      case TaskKind::PickDrop:
        pickdrops.push_back(t);
        break;
    }
  }

  auto solo_cost = [&](const Task& t) {
    return w.alpha * 2.0 * distance_km(depot.location, t.location) + w.rho;
  };
  auto chain_cost = [&](const Task& d, const Task& p) {
    return w.alpha * (distance_km(depot.location, d.location) +
                      distance_km(d.location, p.location) +
                      distance_km(p.location, depot.location)) +
           w.rho;
  };

  double fixed = 0.0;
  for (const Task* t : pickdrops) fixed += solo_cost(*t);

  // partner[i] = index into pickups chained with drops[i], or -1 for solo.
  std::vector<int> partner(drops.size(), -1);
  std::vector<int> best_partner;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<bool> used(pickups.size(), false);

  auto evaluate = [&](double drops_cost) {
    double total = fixed + drops_cost;
    for (std::size_t j = 0; j < pickups.size(); ++j) {
      if (!used[j]) total += solo_cost(*pickups[j]);
    }
    if (total < best_cost) {
      best_cost = total;
      best_partner = partner;
    }
  };

  auto recurse = [&](auto&& self, std::size_t i, double cost_so_far) -> void {
    if (i == drops.size()) {
      evaluate(cost_so_far);
      return;
    }
    partner[i] = -1;
    self(self, i + 1, cost_so_far + solo_cost(*drops[i]));
    for (std::size_t j = 0; j < pickups.size(); ++j) {
      if (used[j]) continue;
      if (!chain_feasible(*drops[i], *pickups[j], depot, drone)) continue;
      used[j] = true;
      partner[i] = static_cast<int>(j);
      self(self, i + 1, cost_so_far + chain_cost(*drops[i], *pickups[j]));
      used[j] = false;
      partner[i] = -1;
    }
  };
  recurse(recurse, 0, 0.0);

  choice.feasible = true;
  choice.cost = best_cost;
  for (const Task* t : pickdrops) {
    choice.sorties.push_back(make_single_sortie(*t, depot, drone));
  }
  std::vector<bool> chained(pickups.size(), false);
  for (std::size_t i = 0; i < drops.size(); ++i) {
    if (best_partner[i] < 0) {
      choice.sorties.push_back(make_single_sortie(*drops[i], depot, drone));
    } else {
      const auto j = static_cast<std::size_t>(best_partner[i]);
      chained[j] = true;
      choice.sorties.push_back(
          make_chain_sortie(*drops[i], *pickups[j], depot, drone));
    }
  }
  for (std::size_t j = 0; j < pickups.size(); ++j) {
    if (!chained[j]) {
      choice.sorties.push_back(make_single_sortie(*pickups[j], depot, drone));
    }
  }
  return choice;
}

}  // namespace

OracleResult brute_force_oracle(const Instance& instance) {
  if (instance.tasks.size() > kMaxTasks ||
      instance.depots.size() > kMaxDepots) {
    throw SizeLimitError("exhaustive search is limited to " +
                         std::to_string(kMaxTasks) + " tasks and " +
                         std::to_string(kMaxDepots) + " depots");
  }
  check_instance(instance);
  const std::size_t c = instance.tasks.size();
  const std::size_t m = instance.depots.size();

  std::size_t combinations = 1;
  for (std::size_t i = 0; i < c; ++i) combinations *= m;

  double best_cost = std::numeric_limits<double>::infinity();
  Schedule best;
  for (std::size_t a = 0; a < combinations; ++a) {
    std::vector<std::vector<const Task*>> groups(m);
    std::size_t code = a;
    for (std::size_t i = 0; i < c; ++i) {
      groups[code % m].push_back(&instance.tasks[i]);
      code /= m;
    }
    double total = 0.0;
    Schedule schedule;
    bool feasible = true;
    for (std::size_t k = 0; k < m; ++k) {
      DepotPlanChoice choice =
          best_depot_plan(instance, instance.depots[k], groups[k]);
      if (!choice.feasible) {
        feasible = false;
        break;
      }
      total += choice.cost;
      schedule.depot_plans.push_back(
          DepotPlan{instance.depots[k].id, std::move(choice.sorties)});
    }
    if (feasible && total < best_cost) {
      best_cost = total;
      best = std::move(schedule);
    }
  }
  // A valid instance always admits the all-solo schedule, so best exists.
  OracleResult result;
  result.schedule = std::move(best);
  result.cost = cached_cost(result.schedule, instance.weights);
  return result;
}

}  // namespace skyplan
