#include "alloc/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "solver/metropolis.hpp"
#include "util/error.hpp"
#include "util/random.hpp"

namespace skyplan {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::TwoExchange:
      return "2-exchange";
    case OperatorKind::ThreeExchange:
      return "3-exchange";
    case OperatorKind::Pct30Exchange:
      return "30%-exchange";
    case OperatorKind::Relocation:
      return "relocation";
    case OperatorKind::OtherRelocation:
      return "other-relocation";
    case OperatorKind::Pct10Relocation:
      return "10%-relocation";
  }
  throw std::logic_error("unreachable operator kind");
}

namespace {

std::size_t nearest_depot_index(const Task& task, const Instance& instance) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < instance.depots.size(); ++i) {
    const double d =
        distance_km(task.location, instance.depots[i].location);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

// Nearest depot other than `exclude`; ties break toward the lower index.
std::size_t nearest_other_depot_index(const Task& task,
                                      const Instance& instance,
                                      std::size_t exclude) {
  std::size_t best = exclude;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < instance.depots.size(); ++i) {
    if (i == exclude) continue;
    const double d =
        distance_km(task.location, instance.depots[i].location);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

}  // namespace

AllocationScheme initial_allocate(const Instance& instance,
                                  std::mt19937_64& rng) {
  AllocationScheme scheme;
  scheme.groups.resize(instance.depots.size());
  for (const Task& task : instance.tasks) {
    const std::size_t k = nearest_depot_index(task, instance);
    if (!round_trip_feasible(task, instance.depots[k], instance.drone)) {
      throw ValidationError("task " + std::to_string(task.id) +
                            " is unreachable from every depot");
    }
    scheme.groups[k].push_back(task.id);
  }
  for (auto& group : scheme.groups) shuffle_vec(group, rng);
  return scheme;
}

AllocationScheme random_feasible_allocate(const Instance& instance,
                                          std::mt19937_64& rng) {
  AllocationScheme scheme;
  scheme.groups.resize(instance.depots.size());
  for (const Task& task : instance.tasks) {
    std::vector<std::size_t> feasible;
    for (std::size_t i = 0; i < instance.depots.size(); ++i) {
      if (round_trip_feasible(task, instance.depots[i], instance.drone)) {
        feasible.push_back(i);
      }
    }
    if (feasible.empty()) {
      throw ValidationError("task " + std::to_string(task.id) +
                            " is unreachable from every depot");
    }
    const std::size_t k = feasible[uniform_index(rng, feasible.size())];
    scheme.groups[k].push_back(task.id);
  }
  for (auto& group : scheme.groups) shuffle_vec(group, rng);
  return scheme;
}

namespace {

void two_exchange(AllocationScheme& scheme, std::mt19937_64& rng) {
  auto& g = scheme.groups[uniform_index(rng, scheme.groups.size())];
  const std::size_t n = g.size();
  if (n < 2) return;
  const std::size_t i = uniform_index(rng, n);
  std::size_t j = uniform_index(rng, n - 1);
  if (j >= i) ++j;
  std::swap(g[i], g[j]);
}

void three_exchange(AllocationScheme& scheme, std::mt19937_64& rng) {
  auto& g = scheme.groups[uniform_index(rng, scheme.groups.size())];
  const std::size_t n = g.size();
  if (n < 3) return;
  const std::size_t i1 = uniform_index(rng, n);
  std::size_t i2 = uniform_index(rng, n - 1);
  if (i2 >= i1) ++i2;
  std::size_t i3 = uniform_index(rng, n - 2);
  const std::size_t lo = std::min(i1, i2);
  const std::size_t hi = std::max(i1, i2);
  if (i3 >= lo) ++i3;
  if (i3 >= hi) ++i3;
  // Rotate the three picked tasks one position around the cycle.
  const int t = g[i1];
  g[i1] = g[i2];
  g[i2] = g[i3];
  g[i3] = t;
}

void pct30_exchange(AllocationScheme& scheme, std::mt19937_64& rng) {
  auto& g = scheme.groups[uniform_index(rng, scheme.groups.size())];
  const std::size_t n = g.size();
  if (n < 2) return;
  const auto k = static_cast<std::size_t>(std::ceil(0.3 * n));
  const std::vector<std::size_t> pos = sample_positions(rng, n, k);
  std::vector<int> picked;
  picked.reserve(pos.size());
  for (const std::size_t p : pos) picked.push_back(g[p]);
  shuffle_vec(picked, rng);
  for (std::size_t j = 0; j < pos.size(); ++j) g[pos[j]] = picked[j];
}

void relocate_one(AllocationScheme& scheme, const Instance& instance,
                  std::mt19937_64& rng, bool pickup_kind) {
  const std::size_t m = scheme.groups.size();
  if (m < 2) return;
  const std::size_t k1 = uniform_index(rng, m);
  std::size_t k2 = uniform_index(rng, m - 1);
  if (k2 >= k1) ++k2;
  auto& from = scheme.groups[k1];
  std::vector<std::size_t> candidates;
  for (std::size_t p = 0; p < from.size(); ++p) {
    const Task& t = instance.task_by_id(from[p]);
    const bool is_pickup = t.kind == TaskKind::Pickup;
    if (is_pickup == pickup_kind) candidates.push_back(p);
  }
  if (candidates.empty()) return;
  const std::size_t p = candidates[uniform_index(rng, candidates.size())];
  const Task& task = instance.task_by_id(from[p]);
  if (!round_trip_feasible(task, instance.depots[k2], instance.drone)) {
    return;  // the target depot cannot fly this task's round trip
  }
  const int id = from[p];
  from.erase(from.begin() + static_cast<std::ptrdiff_t>(p));
  auto& to = scheme.groups[k2];
  const std::size_t at = uniform_index(rng, to.size() + 1);
  to.insert(to.begin() + static_cast<std::ptrdiff_t>(at), id);
}

void pct10_relocate(AllocationScheme& scheme, const Instance& instance,
                    std::mt19937_64& rng) {
  const std::size_t m = scheme.groups.size();
  if (m < 2) return;
  const std::size_t k = uniform_index(rng, m);
  auto& from = scheme.groups[k];
  const std::size_t n = from.size();
  if (n == 0) return;
  const auto cnt = static_cast<std::size_t>(std::ceil(0.1 * n));
  const std::vector<std::size_t> pos = sample_positions(rng, n, cnt);
  struct Move {
    std::size_t pos;
    int id;
    std::size_t target;
  };
  std::vector<Move> moves;
  for (const std::size_t p : pos) {
    const Task& task = instance.task_by_id(from[p]);
    const std::size_t target = nearest_other_depot_index(task, instance, k);
    if (round_trip_feasible(task, instance.depots[target], instance.drone)) {
      moves.push_back(Move{p, from[p], target});
    }
  }
  std::vector<std::size_t> erase_order;
  for (const Move& mv : moves) erase_order.push_back(mv.pos);
  std::sort(erase_order.rbegin(), erase_order.rend());
  for (const std::size_t p : erase_order) {
    from.erase(from.begin() + static_cast<std::ptrdiff_t>(p));
  }
  for (const Move& mv : moves) {
    auto& to = scheme.groups[mv.target];
    const std::size_t at = uniform_index(rng, to.size() + 1);
    to.insert(to.begin() + static_cast<std::ptrdiff_t>(at), mv.id);
  }
}

}  // namespace

AllocationScheme apply_operator(OperatorKind kind,
                                const AllocationScheme& scheme,
                                const Instance& instance,
                                std::mt19937_64& rng) {
  AllocationScheme next = scheme;
  switch (kind) {
    case OperatorKind::TwoExchange:
      two_exchange(next, rng);
      break;
    case OperatorKind::ThreeExchange:
      three_exchange(next, rng);
      break;
    case OperatorKind::Pct30Exchange:
      pct30_exchange(next, rng);
      break;
    case OperatorKind::Relocation:
      relocate_one(next, instance, rng, /*pickup_kind=*/true);
      break;
    case OperatorKind::OtherRelocation:
      relocate_one(next, instance, rng, /*pickup_kind=*/false);
      break;
    case OperatorKind::Pct10Relocation:
      pct10_relocate(next, instance, rng);
      break;
  }
  return next;
}

IvndResult ivnd(const Instance& instance, AllocationScheme scheme,
                Schedule incumbent, double incumbent_cost, int iterations,
                double temperature, std::mt19937_64& rng,
                const RouteBuilder& build_routes) {
  if (iterations < 1) {
    throw std::invalid_argument("ivnd needs at least one iteration");
  }
  IvndResult result;
  result.scheme = std::move(scheme);
  result.schedule = std::move(incumbent);
  result.cost = incumbent_cost;
  result.best_scheme = result.scheme;
  result.best_schedule = result.schedule;
  result.best_cost = result.cost;
  for (int it = 0; it < iterations; ++it) {
    const auto kind =
        static_cast<OperatorKind>(uniform_index(rng, kOperatorCount));
    AllocationScheme candidate =
        apply_operator(kind, result.scheme, instance, rng);
    Schedule routes = build_routes(candidate, result.scheme, result.schedule);
    const double cost = cached_cost(routes, instance.weights);
    const bool accepted =
        metropolis_accept(cost - result.cost, temperature, rng);
    result.steps.push_back(IvndStep{kind, cost, accepted});
    if (accepted) {
      result.scheme = std::move(candidate);
      result.schedule = std::move(routes);
      result.cost = cost;
      if (cost < result.best_cost) {
        result.best_scheme = result.scheme;
        result.best_schedule = result.schedule;
        result.best_cost = cost;
      }
    }
  }
  return result;
}

}  // namespace skyplan
