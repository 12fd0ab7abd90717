#include "solver/solver.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "alloc/allocation.hpp"
#include "route/routing.hpp"
#include "util/error.hpp"

namespace skyplan {

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::Full:
      return "full";
    case Variant::NoLs:
      return "no_ls";
    case Variant::RandomInit:
      return "random_init";
    case Variant::ErpaOnly:
      return "erpa_only";
  }
  throw std::logic_error("unreachable variant");
}

Variant variant_from_string(const std::string& token) {
  if (token == "full") return Variant::Full;
  if (token == "no_ls") return Variant::NoLs;
  if (token == "random_init") return Variant::RandomInit;
  if (token == "erpa_only") return Variant::ErpaOnly;
  throw ParseError("unknown variant '" + token + "'");
}

int planned_outer_iterations(const SaConfig& config) {
  return static_cast<int>(
      std::ceil(std::log(config.t_end / config.t0) / std::log(config.q)));
}

namespace {

void check_config(const SaConfig& config) {
  if (!(config.t0 > config.t_end) || !(config.t_end > 0.0)) {
    throw std::invalid_argument("temperatures must satisfy t0 > t_end > 0");
  }
  if (!(config.q > 0.0) || !(config.q < 1.0)) {
    throw std::invalid_argument("cooling rate must lie in (0, 1)");
  }
  if (config.inner_iterations < 1) {
    throw std::invalid_argument("inner iteration count must be at least 1");
  }
  if (config.n_starts < 1) {
    throw std::invalid_argument("construction start count must be at least 1");
  }
}

// Rewrites each depot's task list in the visit order of the given schedule.
// The construction walk follows list order, so whenever the routes change by
// some other means (the winning multi-start pass, a merge), realigning keeps
// the scheme and the incumbent telling the same story: a depot rebuilt from
// the realigned list reproduces the incumbent's chains instead of tearing
// them up.
void align_scheme(AllocationScheme& scheme, const Schedule& schedule) {
  for (std::size_t k = 0; k < scheme.groups.size(); ++k) {
    const DepotPlan& plan = schedule.depot_plans[k];
    std::vector<int> order;
    order.reserve(scheme.groups[k].size());
    for (const Sortie& s : plan.sorties) {
      for (const Leg& leg : s.legs) {
        if (leg.to != plan.depot_id) order.push_back(leg.to);
      }
    }
    scheme.groups[k] = std::move(order);
  }
}

}  // namespace

SolverReport solve_variant(const Instance& instance, const SaConfig& config,
                           Variant variant) {
  check_config(config);
  check_instance(instance);
  const auto started = std::chrono::steady_clock::now();
  std::mt19937_64 rng(config.seed);

  SolverReport report;
  report.seed = config.seed;

  AllocationScheme scheme = variant == Variant::RandomInit
                                ? random_feasible_allocate(instance, rng)
                                : initial_allocate(instance, rng);
  Schedule incumbent = erpa(scheme, instance, rng, config.n_starts);
  double cost = cached_cost(incumbent, instance.weights);
  report.route_builds = config.n_starts;
  report.initial_cost = cost;

  align_scheme(scheme, incumbent);

  Schedule best_schedule = incumbent;
  double best_cost = cost;
  report.trace.push_back(TracePoint{0, config.t0, cost, cost});

  if (variant != Variant::ErpaOnly) {
    const NodeLookup lookup(instance);
    long long& builds = report.route_builds;
    const RouteBuilder build_routes = [&](const AllocationScheme& candidate,
                                          const AllocationScheme& current,
                                          const Schedule& current_routes) {
      ++builds;
      return erpa_rebuild(candidate, current, current_routes, instance,
                          lookup);
    };
    double t = config.t0;
    int iteration = 0;
    while (t > config.t_end) {
      ++iteration;
      IvndResult inner =
          ivnd(instance, std::move(scheme), std::move(incumbent), cost,
               config.inner_iterations, t, rng, build_routes);
      scheme = std::move(inner.scheme);
      incumbent = std::move(inner.schedule);
      cost = inner.cost;
      if (inner.best_cost < best_cost) {
        best_cost = inner.best_cost;
        best_schedule = std::move(inner.best_schedule);
      }
      if (variant != Variant::NoLs) {
        Schedule merged = local_search(incumbent, instance, rng);
        const double merged_cost = cached_cost(merged, instance.weights);
        if (merged_cost < cost) {
          incumbent = std::move(merged);
          cost = merged_cost;
          align_scheme(scheme, incumbent);
          if (cost < best_cost) {
            best_cost = cost;
            best_schedule = incumbent;
          }
        }
      }
      report.trace.push_back(TracePoint{iteration, t, cost, best_cost});
      t *= config.q;
    }
  }

  report.best_schedule = std::move(best_schedule);
  report.best_cost = best_cost;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

SolverReport solve(const Instance& instance, const SaConfig& config) {
  return solve_variant(instance, config, Variant::Full);
}

}  // namespace skyplan
