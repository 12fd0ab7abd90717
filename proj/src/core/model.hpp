#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "core/geometry.hpp"

namespace skyplan {

enum class TaskKind { Drop, Pickup, PickDrop };

std::string to_string(TaskKind kind);
TaskKind task_kind_from_string(const std::string& token);

// A customer request. Exactly the weights that make sense for the kind are
// meaningful; the others stay zero. PickDrop means the drone swaps parcels
// at the customer: it flies out loaded and flies back loaded.
struct Task {
  int id = 0;
  Location location;
  TaskKind kind = TaskKind::Drop;
  double drop_weight_kg = 0.0;
  double pickup_weight_kg = 0.0;
};

struct Depot {
  int id = 0;
  Location location;
};

// Homogeneous fleet description. max_range_km is the unloaded flying range;
// carrying weight shrinks it (see effective_range_km).
struct DroneSpec {
  double max_range_km = 30.0;
  double max_capacity_kg = 8.0;
  double beta_max = 2.0;
};

// Objective = alpha * total distance + rho * sortie count.
struct ObjectiveWeights {
  double alpha = 0.9;
  double rho = 0.1;
};

struct Instance {
  std::string name;
  CoordinateSystem system = CoordinateSystem::Planar;
  DroneSpec drone;
  ObjectiveWeights weights;
  std::vector<Depot> depots;
  std::vector<Task> tasks;

  const Task& task_by_id(int id) const;
  const Depot& depot_by_id(int id) const;
  bool is_depot_id(int id) const;
};

enum class RoutePattern { PickupOnly, DropOnly, DropThenPickup, PickDropSame };

std::string to_string(RoutePattern pattern);
RoutePattern route_pattern_from_string(const std::string& token);

// One flight segment. Node ids refer to tasks or depots of the instance.
struct Leg {
  int from = 0;
  int to = 0;
  double payload_kg = 0.0;
};

// A closed flight: leaves a depot, serves one or two customers, returns.
// distance_km caches the leg sum for hot-path cost evaluation.
struct Sortie {
  int depot_id = 0;
  RoutePattern pattern = RoutePattern::DropOnly;
  std::vector<Leg> legs;
  double distance_km = 0.0;

  std::vector<int> node_sequence() const;
};

struct DepotPlan {
  int depot_id = 0;
  std::vector<Sortie> sorties;
};

struct Schedule {
  std::vector<DepotPlan> depot_plans;

  int sortie_count() const;
  double total_distance_km() const;
};

// Constant-time id lookup over an instance's tasks and depots. Holds
// pointers into the instance, so the instance must outlive it. Route
// construction builds one per pass instead of scanning id lists.
class NodeLookup {
 public:
  explicit NodeLookup(const Instance& instance);

  const Task* find_task(int id) const {
    const auto it = tasks_.find(id);
    return it == tasks_.end() ? nullptr : it->second;
  }
  const Depot* find_depot(int id) const {
    const auto it = depots_.find(id);
    return it == depots_.end() ? nullptr : it->second;
  }
  const Task& task(int id) const;

 private:
  std::unordered_map<int, const Task*> tasks_;
  std::unordered_map<int, const Depot*> depots_;
};

// Load penalty factor: 1 when empty, beta_max at full capacity, linear in
// between. Weight outside [0, capacity] is a caller bug and throws.
double payload_penalty(double weight_kg, const DroneSpec& drone);

// Range left when carrying weight_kg: max_range / penalty(weight).
double effective_range_km(double weight_kg, const DroneSpec& drone);

// A leg is feasible when its length fits the payload-shrunk range
// (boundary inclusive).
bool leg_feasible(double distance_km, double payload_kg,
                  const DroneSpec& drone);

// Heaviest payload the drone carries on any leg of this task's own round
// trip; decides which depots can serve the task at all.
double heaviest_leg_weight(const Task& task);

bool round_trip_feasible(const Task& task, const Depot& depot,
                         const DroneSpec& drone);

// Authoritative cost: recomputes every leg length from coordinates.
double objective(const Schedule& schedule, const Instance& instance);

// Fast cost from the cached per-sortie distances; solver hot path.
double cached_cost(const Schedule& schedule, const ObjectiveWeights& weights);

// Structural sanity of an instance: positive drone parameters, weights in
// range, unique ids, weights fit capacity, every task reachable from at
// least one depot. Throws ValidationError on the first problem found.
void check_instance(const Instance& instance);

}  // namespace skyplan
