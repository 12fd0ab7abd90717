#pragma once

#include <string>
#include <vector>

#include "core/model.hpp"
#include "solver/solver.hpp"

namespace skyplan {

// Instance files are JSON. Field names are the contract; key order is not.
// Loading checks the same invariants as check_instance, so a file that
// loads is immediately solvable. Saving and loading round-trips exactly
// (shortest round-trip number formatting at both ends).
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// Schedule files carry the per-depot sortie lists plus derived header
// fields (cost, distance, sortie count) for human readers. Loading needs
// the instance to recompute leg distances; structural problems are left
// for validate_schedule to report rather than thrown here.
Schedule load_schedule(const std::string& path, const Instance& instance);
void save_schedule(const Schedule& schedule, const Instance& instance,
                   const std::string& path);

// Convergence trace: iter,temperature,incumbent_cost,best_cost per row.
void write_trace_csv(const std::vector<TracePoint>& trace,
                     const std::string& path);

}  // namespace skyplan
