#include "instances/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "util/error.hpp"
#include "util/text.hpp"

namespace skyplan {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) {
    throw ParseError(ctx + " must be an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing field " + ctx + "." + key);
  }
  return *it;
}

double number(const json& obj, const char* key, const std::string& ctx) {
  const json& v = field(obj, key, ctx);
  if (!v.is_number()) {
    throw ParseError("field " + ctx + "." + key + " must be a number");
  }
  return v.get<double>();
}

int integer(const json& obj, const char* key, const std::string& ctx) {
  const json& v = field(obj, key, ctx);
  if (!v.is_number_integer()) {
    throw ParseError("field " + ctx + "." + key + " must be an integer");
  }
  return v.get<int>();
}

std::string text(const json& obj, const char* key, const std::string& ctx) {
  const json& v = field(obj, key, ctx);
  if (!v.is_string()) {
    throw ParseError("field " + ctx + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

Location read_location(const json& obj, CoordinateSystem system,
                       const std::string& ctx) {
  if (system == CoordinateSystem::Planar) {
    return planar_point(number(obj, "x", ctx), number(obj, "y", ctx));
  }
  return geographic_point(number(obj, "lat", ctx), number(obj, "lon", ctx));
}

json write_location(const Location& location) {
  json obj;
  if (location.system == CoordinateSystem::Planar) {
    obj["x"] = location.x;
    obj["y"] = location.y;
  } else {
    obj["lat"] = location.lat();
    obj["lon"] = location.lon();
  }
  return obj;
}

void write_file(const json& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FileError("cannot write " + path);
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw FileError("failed writing " + path);
  }
}

}  // namespace

Instance load_instance(const std::string& path) {
  const json doc = parse_file(path);
  Instance instance;
  instance.name = text(doc, "name", "instance");
  instance.system = coordinate_system_from_string(
      text(doc, "coordinate_system", "instance"));

  const json& drone = field(doc, "drone", "instance");
  instance.drone.max_range_km = number(drone, "max_range_km", "drone");
  instance.drone.max_capacity_kg = number(drone, "max_capacity_kg", "drone");
  instance.drone.beta_max = number(drone, "beta_max", "drone");

  const json& weights = field(doc, "weights", "instance");
  instance.weights.alpha = number(weights, "alpha", "weights");
  instance.weights.rho = number(weights, "rho", "weights");

  const json& depots = field(doc, "depots", "instance");
  if (!depots.is_array()) {
    throw ParseError("field instance.depots must be an array");
  }
  for (std::size_t i = 0; i < depots.size(); ++i) {
    const std::string ctx = "depots[" + std::to_string(i) + "]";
    Depot depot;
    depot.id = integer(depots[i], "id", ctx);
    depot.location = read_location(depots[i], instance.system, ctx);
    instance.depots.push_back(depot);
  }

  const json& tasks = field(doc, "tasks", "instance");
  if (!tasks.is_array()) {
    throw ParseError("field instance.tasks must be an array");
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string ctx = "tasks[" + std::to_string(i) + "]";
    const json& obj = tasks[i];
    Task task;
    task.id = integer(obj, "id", ctx);
    task.location = read_location(obj, instance.system, ctx);
    task.kind = task_kind_from_string(text(obj, "kind", ctx));
    const bool wants_drop = task.kind != TaskKind::Pickup;
    const bool wants_pickup = task.kind != TaskKind::Drop;
    if (obj.contains("drop_weight") && !wants_drop) {
      throw ParseError("field " + ctx + ".drop_weight is not allowed for a " +
                       to_string(task.kind) + " task");
    }
    if (obj.contains("pickup_weight") && !wants_pickup) {
      throw ParseError("field " + ctx +
                       ".pickup_weight is not allowed for a " +
                       to_string(task.kind) + " task");
    }
    if (wants_drop) task.drop_weight_kg = number(obj, "drop_weight", ctx);
    if (wants_pickup) {
      task.pickup_weight_kg = number(obj, "pickup_weight", ctx);
    }
    instance.tasks.push_back(task);
  }

  check_instance(instance);
  return instance;
}

void save_instance(const Instance& instance, const std::string& path) {
  json doc;
  doc["name"] = instance.name;
  doc["coordinate_system"] = to_string(instance.system);
  doc["drone"] = {{"max_range_km", instance.drone.max_range_km},
                  {"max_capacity_kg", instance.drone.max_capacity_kg},
                  {"beta_max", instance.drone.beta_max}};
  doc["weights"] = {{"alpha", instance.weights.alpha},
                    {"rho", instance.weights.rho}};
  doc["depots"] = json::array();
  for (const Depot& depot : instance.depots) {
    json obj = write_location(depot.location);
    obj["id"] = depot.id;
    doc["depots"].push_back(obj);
  }
  doc["tasks"] = json::array();
  for (const Task& task : instance.tasks) {
    json obj = write_location(task.location);
    obj["id"] = task.id;
    obj["kind"] = to_string(task.kind);
    if (task.kind != TaskKind::Pickup) {
      obj["drop_weight"] = task.drop_weight_kg;
    }
    if (task.kind != TaskKind::Drop) {
      obj["pickup_weight"] = task.pickup_weight_kg;
    }
    doc["tasks"].push_back(obj);
  }
  write_file(doc, path);
}

Schedule load_schedule(const std::string& path, const Instance& instance) {
  const json doc = parse_file(path);
  Schedule schedule;
  const json& depots = field(doc, "depots", "schedule");
  if (!depots.is_array()) {
    throw ParseError("field schedule.depots must be an array");
  }
  auto locate = [&instance](int id) -> const Location* {
    for (const Depot& d : instance.depots) {
      if (d.id == id) return &d.location;
    }
    for (const Task& t : instance.tasks) {
      if (t.id == id) return &t.location;
    }
    return nullptr;
  };
  for (std::size_t i = 0; i < depots.size(); ++i) {
    const std::string dctx = "depots[" + std::to_string(i) + "]";
    DepotPlan plan;
    plan.depot_id = integer(depots[i], "depot_id", dctx);
    const json& sorties = field(depots[i], "sorties", dctx);
    if (!sorties.is_array()) {
      throw ParseError("field " + dctx + ".sorties must be an array");
    }
    for (std::size_t s = 0; s < sorties.size(); ++s) {
      const std::string sctx = dctx + ".sorties[" + std::to_string(s) + "]";
      Sortie sortie;
      sortie.depot_id = plan.depot_id;
      sortie.pattern =
          route_pattern_from_string(text(sorties[s], "pattern", sctx));
      const json& legs = field(sorties[s], "legs", sctx);
      if (!legs.is_array()) {
        throw ParseError("field " + sctx + ".legs must be an array");
      }
      for (std::size_t l = 0; l < legs.size(); ++l) {
        const std::string lctx = sctx + ".legs[" + std::to_string(l) + "]";
        Leg leg;
        leg.from = integer(legs[l], "from", lctx);
        leg.to = integer(legs[l], "to", lctx);
        leg.payload_kg = number(legs[l], "payload_kg", lctx);
        const Location* a = locate(leg.from);
        const Location* b = locate(leg.to);
        if (a != nullptr && b != nullptr) {
          sortie.distance_km += distance_km(*a, *b);
        }
        sortie.legs.push_back(leg);
      }
      plan.sorties.push_back(std::move(sortie));
    }
    schedule.depot_plans.push_back(std::move(plan));
  }
  return schedule;
}

void save_schedule(const Schedule& schedule, const Instance& instance,
                   const std::string& path) {
  json doc;
  doc["instance"] = instance.name;
  doc["cost"] = cached_cost(schedule, instance.weights);
  doc["distance_km"] = schedule.total_distance_km();
  doc["sorties"] = schedule.sortie_count();
  doc["depots"] = json::array();
  for (const DepotPlan& plan : schedule.depot_plans) {
    json dplan;
    dplan["depot_id"] = plan.depot_id;
    dplan["sorties"] = json::array();
    for (const Sortie& sortie : plan.sorties) {
      json s;
      s["pattern"] = to_string(sortie.pattern);
      s["legs"] = json::array();
      for (const Leg& leg : sortie.legs) {
        s["legs"].push_back({{"from", leg.from},
                             {"to", leg.to},
                             {"payload_kg", leg.payload_kg}});
      }
      dplan["sorties"].push_back(std::move(s));
    }
    doc["depots"].push_back(std::move(dplan));
  }
  write_file(doc, path);
}

void write_trace_csv(const std::vector<TracePoint>& trace,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FileError("cannot write " + path);
  }
  out << "iter,temperature,incumbent_cost,best_cost\n";
  for (const TracePoint& p : trace) {
    out << p.iteration << ',' << format_double(p.temperature) << ','
        << format_double(p.incumbent_cost) << ','
        << format_double(p.best_cost) << '\n';
  }
  if (!out) {
    throw FileError("failed writing " + path);
  }
}

}  // namespace skyplan
