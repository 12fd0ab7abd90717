#include "core/validate.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "util/text.hpp"

namespace skyplan {

std::string to_string(const Violation& v) {
  std::string out = v.constraint + " depot " + std::to_string(v.depot_id);
  if (v.sortie_index >= 0) {
    out += " sortie " + std::to_string(v.sortie_index);
  }
  out += ": " + v.detail;
  return out;
}

namespace {

struct Checker {
  const Instance& instance;
  std::vector<Violation> out;
  // task id -> number of visits / set of (depot, sortie) that touch it
  std::map<int, int> visits;
  std::map<int, std::set<std::pair<int, int>>> visit_sorties;

  const Task* find_task(int id) const {
    for (const Task& t : instance.tasks) {
      if (t.id == id) return &t;
    }
    return nullptr;
  }

  bool known_node(int id) const {
    return instance.is_depot_id(id) || find_task(id) != nullptr;
  }

  void add(const std::string& constraint, int depot_id, int sortie_index,
           const std::string& detail) {
    out.push_back(Violation{constraint, depot_id, sortie_index, detail});
  }

  // Structure that makes a sortie uninterpretable: no legs, unknown ids.
  // Returns false when the remaining checks cannot run.
  bool check_structure(const Sortie& s, int depot_id, int idx) {
    if (s.legs.empty()) {
      add("C1", depot_id, idx, "sortie has no legs");
      return false;
    }
    bool ok = true;
    std::set<int> reported;  // each unknown id once per sortie
    for (const Leg& leg : s.legs) {
      for (int id : {leg.from, leg.to}) {
        if (!known_node(id) && reported.insert(id).second) {
          add("C1", depot_id, idx,
              "node id " + std::to_string(id) + " is unknown");
          ok = false;
        }
      }
    }
    if (s.depot_id != depot_id) {
      add("C1", depot_id, idx,
          "sortie is filed under depot " + std::to_string(depot_id) +
              " but claims depot " + std::to_string(s.depot_id));
      ok = false;
    }
    return ok;
  }

  void check_endpoints(const Sortie& s, int depot_id, int idx) {
    if (s.legs.front().from != depot_id) {
      add("C3", depot_id, idx,
          "first leg departs node " + std::to_string(s.legs.front().from) +
              ", not the depot");
    }
    if (s.legs.back().to != depot_id) {
      add("C3", depot_id, idx,
          "last leg arrives at node " + std::to_string(s.legs.back().to) +
              ", not the depot");
    }
    for (std::size_t i = 0; i + 1 < s.legs.size(); ++i) {
      if (s.legs[i].to != s.legs[i + 1].from) {
        add("C3", depot_id, idx,
            "leg " + std::to_string(i) + " ends at node " +
                std::to_string(s.legs[i].to) + " but leg " +
                std::to_string(i + 1) + " starts at node " +
                std::to_string(s.legs[i + 1].from));
      }
    }
  }

  // Middle nodes of the sequence, i.e. the customers the sortie visits.
  std::vector<const Task*> visited_tasks(const Sortie& s) {
    std::vector<const Task*> tasks;
    const std::vector<int> seq = s.node_sequence();
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
      const Task* t = find_task(seq[i]);
      if (t != nullptr) tasks.push_back(t);
    }
    return tasks;
  }

  void check_pattern(const Sortie& s, int depot_id, int idx) {
    auto fail = [&](const std::string& detail) {
      add("pattern", depot_id, idx, detail);
    };
    const std::size_t want_legs =
        s.pattern == RoutePattern::DropThenPickup ? 3 : 2;
    if (s.legs.size() != want_legs) {
      fail("pattern " + to_string(s.pattern) + " needs " +
           std::to_string(want_legs) + " legs, found " +
           std::to_string(s.legs.size()));
      return;
    }
    const std::vector<int> seq = s.node_sequence();
    std::vector<const Task*> tasks;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
      const Task* t = find_task(seq[i]);
      if (t == nullptr) {
        fail("node " + std::to_string(seq[i]) +
             " in the middle of the route is not a task");
        return;
      }
      tasks.push_back(t);
    }
    auto want_kind = [&](const Task& t, TaskKind kind) {
      if (t.kind != kind) {
        fail("task " + std::to_string(t.id) + " is a " + to_string(t.kind) +
             " task, pattern expects " + to_string(kind));
        return false;
      }
      return true;
    };
    auto want_payload = [&](std::size_t leg, double expect) {
      if (s.legs[leg].payload_kg != expect) {
        fail("leg " + std::to_string(leg) + " carries " +
             format_double(s.legs[leg].payload_kg) + " kg, expected " +
             format_double(expect));
        return false;
      }
      return true;
    };
    switch (s.pattern) {
      case RoutePattern::PickupOnly:
        if (!want_kind(*tasks[0], TaskKind::Pickup)) return;
        if (!want_payload(0, 0.0)) return;
        want_payload(1, tasks[0]->pickup_weight_kg);
        return;
      case RoutePattern::DropOnly:
        if (!want_kind(*tasks[0], TaskKind::Drop)) return;
        if (!want_payload(0, tasks[0]->drop_weight_kg)) return;
        want_payload(1, 0.0);
        return;
      case RoutePattern::DropThenPickup:
        if (!want_kind(*tasks[0], TaskKind::Drop)) return;
        if (!want_kind(*tasks[1], TaskKind::Pickup)) return;
        if (!want_payload(0, tasks[0]->drop_weight_kg)) return;
        if (!want_payload(1, 0.0)) return;
        want_payload(2, tasks[1]->pickup_weight_kg);
        return;
      case RoutePattern::PickDropSame:
        if (!want_kind(*tasks[0], TaskKind::PickDrop)) return;
        if (!want_payload(0, tasks[0]->drop_weight_kg)) return;
        want_payload(1, tasks[0]->pickup_weight_kg);
        return;
    }
  }

  void check_legs(const Sortie& s, int depot_id, int idx) {
    auto locate = [&](int id) -> const Location& {
      if (instance.is_depot_id(id)) return instance.depot_by_id(id).location;
      return instance.task_by_id(id).location;
    };
    for (std::size_t i = 0; i < s.legs.size(); ++i) {
      const Leg& leg = s.legs[i];
      if (leg.payload_kg < 0.0 ||
          leg.payload_kg > instance.drone.max_capacity_kg) {
        add("C6", depot_id, idx,
            "leg " + std::to_string(i) + " payload " +
                format_double(leg.payload_kg) + " kg outside [0, " +
                format_double(instance.drone.max_capacity_kg) + "]");
        continue;  // range is undefined beyond capacity
      }
      const double d = distance_km(locate(leg.from), locate(leg.to));
      const double reach = effective_range_km(leg.payload_kg, instance.drone);
      if (d > reach) {
        add("C5", depot_id, idx,
            "leg " + std::to_string(i) + " is " + format_double(d) +
                " km, range at " + format_double(leg.payload_kg) + " kg is " +
                format_double(reach) + " km");
      }
    }
  }

  void check_coverage() {
    for (const Task& t : instance.tasks) {
      const auto it = visits.find(t.id);
      const int n = it == visits.end() ? 0 : it->second;
      if (n != 1) {
        add("C3", 0, -1,
            "task " + std::to_string(t.id) + " is served " +
                std::to_string(n) + " times, expected once");
      }
      if (t.kind == TaskKind::PickDrop && visit_sorties[t.id].size() > 1) {
        add("C4", 0, -1,
            "pick-and-drop task " + std::to_string(t.id) + " is split over " +
                std::to_string(visit_sorties[t.id].size()) + " sorties");
      }
    }
  }

  void run(const Schedule& schedule) {
    for (const DepotPlan& plan : schedule.depot_plans) {
      if (!instance.is_depot_id(plan.depot_id)) {
        add("C1", plan.depot_id, -1,
            "depot id " + std::to_string(plan.depot_id) + " is unknown");
        continue;
      }
      for (std::size_t idx = 0; idx < plan.sorties.size(); ++idx) {
        const Sortie& s = plan.sorties[idx];
        const int i = static_cast<int>(idx);
        if (!check_structure(s, plan.depot_id, i)) continue;
        check_endpoints(s, plan.depot_id, i);
        check_pattern(s, plan.depot_id, i);
        check_legs(s, plan.depot_id, i);
        for (const Task* t : visited_tasks(s)) {
          ++visits[t->id];
          visit_sorties[t->id].insert({plan.depot_id, i});
        }
      }
    }
    check_coverage();
  }
};

}  // namespace

std::vector<Violation> validate_schedule(const Instance& instance,
                                         const Schedule& schedule) {
  Checker checker{instance};
  checker.run(schedule);
  return std::move(checker.out);
}

}  // namespace skyplan
