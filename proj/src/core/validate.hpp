#pragma once

#include <string>
#include <vector>

#include "core/model.hpp"

namespace skyplan {

// One broken rule. constraint is "C1".."C6" or "pattern"; sortie_index is
// -1 for schedule-wide findings (coverage).
struct Violation {
  std::string constraint;
  int depot_id = 0;
  int sortie_index = -1;
  std::string detail;
};

std::string to_string(const Violation& violation);

// Checks a schedule against the instance. Violations are reported as data,
// never thrown, and come out in a deterministic order: per sortie
// (structure, endpoints, pattern, per-leg capacity and range), then
// schedule-wide coverage in task order.
//
//   C1      node ids that belong to neither a task nor a depot, or
//           structurally empty sorties
//   C3      sortie does not start/end at its depot, legs not contiguous,
//           or a task served a number of times != 1
//   C4      a pick-and-drop task split across several sorties
//   C5      leg longer than the payload-shrunk flying range
//   C6      leg payload outside [0, capacity]
//   pattern sortie shape, task kinds, or leg payloads do not match the
//           declared route pattern
std::vector<Violation> validate_schedule(const Instance& instance,
                                         const Schedule& schedule);

}  // namespace skyplan
