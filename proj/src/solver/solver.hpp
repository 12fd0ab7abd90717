#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace skyplan {

// Annealing parameters. Defaults follow the benchmark setup: start hot at
// 1000, cool geometrically by 0.93 down to 1e-7, 20 inner moves per
// temperature, 10 elitist construction starts.
struct SaConfig {
  double t0 = 1000.0;
  double t_end = 1e-7;
  double q = 0.93;
  int inner_iterations = 20;
  int n_starts = 10;
  std::uint64_t seed = 1;
};

// full: the whole pipeline. no_ls: skip the merge local search.
// random_init: random feasible depot assignment instead of nearest-depot
// clustering. erpa_only: stop after the initial construction.
enum class Variant { Full, NoLs, RandomInit, ErpaOnly };

std::string to_string(Variant variant);
Variant variant_from_string(const std::string& token);

// One row per outer iteration; iteration 0 is the initial construction.
struct TracePoint {
  int iteration = 0;
  double temperature = 0.0;
  double incumbent_cost = 0.0;
  double best_cost = 0.0;
};

struct SolverReport {
  Schedule best_schedule;
  double best_cost = 0.0;
  double initial_cost = 0.0;
  std::vector<TracePoint> trace;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
  // Work accounting: route constructions = outer iterations x
  // inner_iterations, plus n_starts for the initial schedule.
  long long route_builds = 0;
};

// Number of cooling steps until t0 shrinks to t_end: ceil(log(t_end/t0)/log q).
int planned_outer_iterations(const SaConfig& config);

SolverReport solve(const Instance& instance, const SaConfig& config);

SolverReport solve_variant(const Instance& instance, const SaConfig& config,
                           Variant variant);

}  // namespace skyplan
