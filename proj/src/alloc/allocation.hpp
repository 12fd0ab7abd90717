#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace skyplan {

// Phase-one state: which depot serves which tasks, and in what order.
// groups[i] is the ordered task-id list of instance.depots[i].
struct AllocationScheme {
  std::vector<std::vector<int>> groups;
};

enum class OperatorKind {
  TwoExchange,
  ThreeExchange,
  Pct30Exchange,
  Relocation,
  OtherRelocation,
  Pct10Relocation,
};

inline constexpr int kOperatorCount = 6;

std::string to_string(OperatorKind kind);

// Every task goes to its nearest depot (clustering with the depots as
// fixed centers); each depot list is then shuffled. The nearest depot is
// always reachable when any depot is, so a valid instance cannot fail here.
AllocationScheme initial_allocate(const Instance& instance,
                                  std::mt19937_64& rng);

// Ablation baseline: each task picks uniformly among the depots that can
// serve it at all, ignoring distance; lists shuffled afterwards.
AllocationScheme random_feasible_allocate(const Instance& instance,
                                          std::mt19937_64& rng);

// One random neighborhood move. Exchanges permute within one depot;
// relocations move tasks between depots but only to depots that can fly
// the task's round trip (an infeasible target makes the move a no-op, so
// phase two never sees an unroutable allocation). Degenerate draws (too
// few tasks, one depot) return the input unchanged.
AllocationScheme apply_operator(OperatorKind kind,
                                const AllocationScheme& scheme,
                                const Instance& instance,
                                std::mt19937_64& rng);

// Phase-two constructor handle used inside the annealing loop: builds the
// candidate scheme's routes, given the incumbent scheme and its routes so
// implementations may carry unchanged depots' sorties over verbatim.
using RouteBuilder = std::function<Schedule(
    const AllocationScheme& candidate, const AllocationScheme& current,
    const Schedule& current_routes)>;

struct IvndStep {
  OperatorKind op;
  double candidate_cost = 0.0;
  bool accepted = false;
};

struct IvndResult {
  AllocationScheme scheme;  // incumbent after the last iteration
  Schedule schedule;
  double cost = 0.0;
  AllocationScheme best_scheme;  // cheapest point ever accepted
  Schedule best_schedule;
  double best_cost = 0.0;
  std::vector<IvndStep> steps;
};

// Variable neighborhood descent under Metropolis acceptance: exactly
// `iterations` rounds of propose-build-evaluate-accept at the given
// temperature. build_routes is the phase-two constructor and is invoked
// exactly once per iteration.
IvndResult ivnd(const Instance& instance, AllocationScheme scheme,
                Schedule incumbent, double incumbent_cost, int iterations,
                double temperature, std::mt19937_64& rng,
                const RouteBuilder& build_routes);

}  // namespace skyplan
