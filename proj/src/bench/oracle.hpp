#pragma once

#include "core/model.hpp"

namespace skyplan {

struct OracleResult {
  double cost = 0.0;
  Schedule schedule;
};

// Exhaustive optimum for tiny inputs: every task-to-depot assignment,
// every drop/pickup chaining within each depot. Guarded to at most 6 tasks
// and 2 depots; beyond that it refuses rather than runs forever.
OracleResult brute_force_oracle(const Instance& instance);

}  // namespace skyplan
