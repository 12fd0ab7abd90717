#pragma once

#include <random>
#include <vector>

#include "alloc/allocation.hpp"
#include "core/model.hpp"

namespace skyplan {

// True when depot -> drop -> pickup -> depot fits the range at every leg
// (loaded out, empty between customers, loaded back).
bool chain_feasible(const Task& drop_task, const Task& pickup_task,
                    const Depot& depot, const DroneSpec& drone);

// One-customer round trip; the pattern follows the task kind. Throws
// std::invalid_argument when a leg cannot fly, so no caller ever holds an
// infeasible sortie.
Sortie make_single_sortie(const Task& task, const Depot& depot,
                          const DroneSpec& drone);

// Two-customer chained sortie (DropThenPickup). Same feasibility contract.
Sortie make_chain_sortie(const Task& drop_task, const Task& pickup_task,
                         const Depot& depot, const DroneSpec& drone);

// One construction pass over the scheme as given: walk each depot's task
// list in its current order; drops and pick-drops each open a sortie; a
// pickup whose predecessor in the list is a drop joins that drop's sortie
// with probability 0.5 when the chained legs fit, and flies alone
// otherwise. List order is the only structural input, so reordering a
// depot's list is how callers explore different route shapes. The lookup
// overloads let a caller in a loop reuse one id index.
Schedule erpa_single(const AllocationScheme& scheme, const Instance& instance,
                     std::mt19937_64& rng);
Schedule erpa_single(const AllocationScheme& scheme, const Instance& instance,
                     const NodeLookup& lookup, std::mt19937_64& rng);

// Elitist multi-start constructor: n_starts passes, each walking a freshly
// shuffled copy of every depot list, cheapest schedule wins (first winner
// kept on ties).
Schedule erpa(const AllocationScheme& scheme, const Instance& instance,
              std::mt19937_64& rng, int n_starts);

// Incremental reconstruction after a scheme edit: a depot whose ordered
// task list is unchanged keeps its existing sorties verbatim; every other
// depot is rebuilt by running repair over its new ordered walk, which
// chains every feasible adjacent drop-pickup pair. Deterministic, so the
// cost change of an edit reflects the edit alone, and route improvements
// at untouched depots survive it.
Schedule erpa_rebuild(const AllocationScheme& scheme,
                      const AllocationScheme& previous,
                      const Schedule& previous_routes, const Instance& instance,
                      const NodeLookup& lookup);

// Cuts a raw node walk (depot, customers..., depot) into valid sorties:
// greedy left-to-right, chaining a drop with an immediately following
// pickup whenever the chained legs fit, splitting everything else into
// single-customer round trips. Intermediate depot visits force a cut.
// Keeps customer order; a customer that cannot fly even alone is an error
// naming the task.
std::vector<Sortie> repair(const std::vector<int>& raw_route,
                           const Instance& instance);
std::vector<Sortie> repair(const std::vector<int>& raw_route,
                           const Instance& instance,
                           const NodeLookup& lookup);

// One merge attempt: at a random depot, pick a random lone-drop sortie and
// a random lone-pickup sortie and fuse them into a DropThenPickup sortie
// when feasible. Anything else returns the input unchanged.
Schedule local_search(const Schedule& schedule, const Instance& instance,
                      std::mt19937_64& rng);

}  // namespace skyplan
