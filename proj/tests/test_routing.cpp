#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "alloc/allocation.hpp"
#include "core/validate.hpp"
#include "helpers.hpp"
#include "util/error.hpp"
#include "util/random.hpp"
#include "instances/generate.hpp"
#include "route/routing.hpp"

using namespace skyplan;
using namespace testutil;

namespace {

std::set<int> served_tasks(const Schedule& schedule, const Instance& instance) {
  std::set<int> ids;
  for (const auto& plan : schedule.depot_plans) {
    for (const auto& sortie : plan.sorties) {
      const auto seq = sortie.node_sequence();
      for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        if (!instance.is_depot_id(seq[i])) ids.insert(seq[i]);
      }
    }
  }
  return ids;
}

std::set<int> all_task_ids(const Instance& instance) {
  std::set<int> ids;
  for (const Task& t : instance.tasks) ids.insert(t.id);
  return ids;
}

}  // namespace

TEST_CASE("single sorties carry the right payloads") {
  const DroneSpec drone;
  const Depot home = depot(10, 0.0, 0.0);

  const Sortie d = make_single_sortie(drop_task(1, 0.0, 5.0, 3.0), home, drone);
  CHECK(d.pattern == RoutePattern::DropOnly);
  CHECK(d.depot_id == 10);
  REQUIRE(d.legs.size() == 2);
  CHECK(d.legs[0].payload_kg == 3.0);
  CHECK(d.legs[1].payload_kg == 0.0);
  CHECK(d.distance_km == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(d.node_sequence() == std::vector<int>{10, 1, 10});

  const Sortie p =
      make_single_sortie(pickup_task(2, 3.0, 4.0, 6.0), home, drone);
  CHECK(p.pattern == RoutePattern::PickupOnly);
  CHECK(p.legs[0].payload_kg == 0.0);
  CHECK(p.legs[1].payload_kg == 6.0);
  CHECK(p.distance_km == doctest::Approx(10.0).epsilon(1e-12));

  const Sortie s =
      make_single_sortie(pickdrop_task(3, 0.0, 2.0, 4.0, 5.0), home, drone);
  CHECK(s.pattern == RoutePattern::PickDropSame);
  CHECK(s.legs[0].payload_kg == 4.0);
  CHECK(s.legs[1].payload_kg == 5.0);
}

TEST_CASE("single sortie refuses an infeasible leg") {
  const DroneSpec drone;
  const Depot home = depot(10, 0.0, 0.0);
  // 16 km out with 8 kg exceeds the 15 km loaded range.
  CHECK_THROWS_AS(make_single_sortie(drop_task(1, 16.0, 0.0, 8.0), home, drone),
                  std::invalid_argument);
}

TEST_CASE("chain feasibility checks all three legs") {
  const DroneSpec drone;
  const Depot home = depot(10, 0.0, 0.0);
  const Task d = drop_task(1, 0.0, 5.0, 5.0);
  const Task p = pickup_task(2, 0.0, 17.0, 2.0);
  CHECK(chain_feasible(d, p, home, drone));

  const Sortie chain = make_chain_sortie(d, p, home, drone);
  CHECK(chain.pattern == RoutePattern::DropThenPickup);
  REQUIRE(chain.legs.size() == 3);
  CHECK(chain.legs[0].payload_kg == 5.0);
  CHECK(chain.legs[1].payload_kg == 0.0);
  CHECK(chain.legs[2].payload_kg == 2.0);
  CHECK(chain.distance_km == doctest::Approx(34.0).epsilon(1e-12));
  CHECK(chain.node_sequence() == std::vector<int>{10, 1, 2, 10});

  // Both customers are reachable alone, but the empty leg between them is
  // longer than the drone can fly at all.
  const Task far_d = drop_task(3, 20.0, 0.0, 1.0);
  const Task far_p = pickup_task(4, -20.0, 0.0, 1.0);
  CHECK(round_trip_feasible(far_d, home, drone));
  CHECK(round_trip_feasible(far_p, home, drone));
  CHECK_FALSE(chain_feasible(far_d, far_p, home, drone));
  CHECK_THROWS_AS(make_chain_sortie(far_d, far_p, home, drone),
                  std::invalid_argument);
}

TEST_CASE("construction builds one sortie per isolated task") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)}, {drop_task(1, 0.0, 5.0, 3.0)});
  AllocationScheme scheme;
  scheme.groups = {{1}};
  std::mt19937_64 rng(1);
  const Schedule schedule = erpa_single(scheme, instance, rng);
  REQUIRE(schedule.depot_plans.size() == 1);
  REQUIRE(schedule.depot_plans[0].sorties.size() == 1);
  CHECK(schedule.depot_plans[0].sorties[0].pattern == RoutePattern::DropOnly);
  CHECK(validate_schedule(instance, schedule).empty());
}

TEST_CASE("construction sometimes chains a drop with the next pickup") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 2.0, 0.0, 2.0), pickup_task(2, 4.0, 0.0, 2.0)});
  AllocationScheme scheme;
  scheme.groups = {{1, 2}};

  int chained = 0;
  int split = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const Schedule schedule = erpa_single(scheme, instance, rng);
    CHECK(validate_schedule(instance, schedule).empty());
    CHECK(served_tasks(schedule, instance) == all_task_ids(instance));
    const int sorties = schedule.sortie_count();
    REQUIRE(sorties >= 1);
    REQUIRE(sorties <= 2);
    if (sorties == 1) {
      ++chained;
      CHECK(schedule.depot_plans[0].sorties[0].pattern ==
            RoutePattern::DropThenPickup);
    } else {
      ++split;
    }
  }
  // The walk keeps the list order, so the pickup follows the drop every
  // time and the chain comes down to the coin flip.
  CHECK(chained > 60);
  CHECK(split > 60);
}

TEST_CASE("construction output is always valid on random instances") {
  for (int i = 0; i < 300; ++i) {
    GenParams params;
    params.num_tasks = 2 + (i % 7);
    params.num_depots = 1 + (i % 3);
    params.seed = 1000 + static_cast<std::uint64_t>(i);
    const Instance instance = generate(params);

    std::mt19937_64 rng(static_cast<std::uint64_t>(i));
    const AllocationScheme scheme = initial_allocate(instance, rng);
    const Schedule schedule = erpa(scheme, instance, rng, 1 + (i % 3));
    REQUIRE(validate_schedule(instance, schedule).empty());
    REQUIRE(served_tasks(schedule, instance) == all_task_ids(instance));
  }
}

TEST_CASE("multi-start construction keeps the best of its attempts") {
  GenParams params;
  params.num_tasks = 10;
  params.num_depots = 2;
  params.seed = 77;
  const Instance instance = generate(params);
  const NodeLookup lookup(instance);
  std::mt19937_64 setup(99);
  const AllocationScheme scheme = initial_allocate(instance, setup);

  std::mt19937_64 rng(123);
  const Schedule best = erpa(scheme, instance, rng, 5);
  const double best_cost = cached_cost(best, instance.weights);

  // Replay: the wrapper derives one sub-seed per attempt up front, and each
  // attempt walks a freshly shuffled copy of every depot list.
  std::mt19937_64 replay(123);
  double expected = 0.0;
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < 5; ++i) seeds.push_back(replay());
  for (int i = 0; i < 5; ++i) {
    std::mt19937_64 attempt(seeds[i]);
    AllocationScheme shuffled = scheme;
    for (std::vector<int>& group : shuffled.groups) {
      shuffle_vec(group, attempt);
    }
    const Schedule s = erpa_single(shuffled, instance, lookup, attempt);
    const double c = cached_cost(s, instance.weights);
    if (i == 0 || c < expected) expected = c;
  }
  CHECK(best_cost == expected);
}

TEST_CASE("incremental rebuild keeps untouched depots verbatim") {
  const Instance instance = make_instance(
      {depot(10, 0.0, 0.0), depot(11, 30.0, 0.0)},
      {drop_task(1, 2.0, 0.0, 2.0), pickup_task(2, 4.0, 0.0, 2.0),
       drop_task(3, 30.0, 5.0, 1.0), pickup_task(4, 30.0, -5.0, 1.0)});
  const NodeLookup lookup(instance);
  AllocationScheme before;
  before.groups = {{1, 2}, {3, 4}};
  std::mt19937_64 rng(7);
  const Schedule routes = erpa_single(before, instance, lookup, rng);

  AllocationScheme after = before;
  std::swap(after.groups[1][0], after.groups[1][1]);
  const Schedule rebuilt =
      erpa_rebuild(after, before, routes, instance, lookup);

  REQUIRE(rebuilt.depot_plans.size() == 2);
  // Depot 10's list did not change, so its sorties are copied, coins and all.
  REQUIRE(rebuilt.depot_plans[0].sorties.size() ==
          routes.depot_plans[0].sorties.size());
  for (std::size_t i = 0; i < routes.depot_plans[0].sorties.size(); ++i) {
    CHECK(same_legs(rebuilt.depot_plans[0].sorties[i],
                    routes.depot_plans[0].sorties[i]));
  }
  // Depot 11 now visits the pickup first, which cannot chain.
  REQUIRE(rebuilt.depot_plans[1].sorties.size() == 2);
  CHECK(rebuilt.depot_plans[1].sorties[0].pattern == RoutePattern::PickupOnly);
  CHECK(rebuilt.depot_plans[1].sorties[1].pattern == RoutePattern::DropOnly);
  CHECK(validate_schedule(instance, rebuilt).empty());
}

TEST_CASE("incremental rebuild chains every feasible adjacent pair") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 2.0, 0.0, 2.0), pickup_task(2, 4.0, 0.0, 2.0)});
  const NodeLookup lookup(instance);
  AllocationScheme before;
  before.groups = {{2, 1}};
  std::mt19937_64 rng(3);
  const Schedule routes = erpa_single(before, instance, lookup, rng);
  REQUIRE(routes.depot_plans[0].sorties.size() == 2);

  AllocationScheme after;
  after.groups = {{1, 2}};
  const Schedule rebuilt =
      erpa_rebuild(after, before, routes, instance, lookup);
  // The rebuild is deterministic: a feasible drop-pickup adjacency always
  // becomes one chained sortie, with no coin involved.
  REQUIRE(rebuilt.depot_plans[0].sorties.size() == 1);
  CHECK(rebuilt.depot_plans[0].sorties[0].pattern ==
        RoutePattern::DropThenPickup);

  const Schedule again = erpa_rebuild(after, before, routes, instance, lookup);
  CHECK(same_schedule(again, rebuilt));
}

TEST_CASE("incremental rebuild rejects mismatched shapes") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)}, {drop_task(1, 2.0, 0.0, 2.0)});
  const NodeLookup lookup(instance);
  AllocationScheme scheme;
  scheme.groups = {{1}};
  std::mt19937_64 rng(1);
  const Schedule routes = erpa_single(scheme, instance, lookup, rng);

  AllocationScheme wrong;
  wrong.groups = {{1}, {}};
  CHECK_THROWS_AS(erpa_rebuild(wrong, scheme, routes, instance, lookup),
                  std::invalid_argument);
  CHECK_THROWS_AS(erpa_rebuild(scheme, wrong, routes, instance, lookup),
                  std::invalid_argument);
}

TEST_CASE("repair splits two drops into two round trips") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 0.0, 3.0, 2.0), drop_task(2, 3.0, 0.0, 2.0)});
  const auto sorties = repair({10, 1, 2, 10}, instance);
  REQUIRE(sorties.size() == 2);
  CHECK(sorties[0].pattern == RoutePattern::DropOnly);
  CHECK(sorties[1].pattern == RoutePattern::DropOnly);
  CHECK(sorties[0].node_sequence() == std::vector<int>{10, 1, 10});
  CHECK(sorties[1].node_sequence() == std::vector<int>{10, 2, 10});
}

TEST_CASE("repair keeps a feasible drop-pickup chain together") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 0.0, 5.0, 5.0), pickup_task(2, 0.0, 17.0, 2.0)});
  const auto sorties = repair({10, 1, 2, 10}, instance);
  REQUIRE(sorties.size() == 1);
  CHECK(sorties[0].pattern == RoutePattern::DropThenPickup);
  CHECK(sorties[0].node_sequence() == std::vector<int>{10, 1, 2, 10});
  CHECK(sorties[0].distance_km == doctest::Approx(34.0).epsilon(1e-12));
}

TEST_CASE("repair does not chain a pickup that comes first") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 0.0, 5.0, 5.0), pickup_task(2, 0.0, 17.0, 2.0)});
  const auto sorties = repair({10, 2, 1, 10}, instance);
  REQUIRE(sorties.size() == 2);
  CHECK(sorties[0].pattern == RoutePattern::PickupOnly);
  CHECK(sorties[1].pattern == RoutePattern::DropOnly);
}

TEST_CASE("repair splits a chain whose middle leg cannot fly") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 20.0, 0.0, 1.0), pickup_task(2, -20.0, 0.0, 1.0)});
  const auto sorties = repair({10, 1, 2, 10}, instance);
  REQUIRE(sorties.size() == 2);
  CHECK(sorties[0].pattern == RoutePattern::DropOnly);
  CHECK(sorties[1].pattern == RoutePattern::PickupOnly);
}

TEST_CASE("repair honors an explicit depot visit as a cut") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 0.0, 5.0, 5.0), pickup_task(2, 0.0, 17.0, 2.0)});
  const auto sorties = repair({10, 1, 10, 2, 10}, instance);
  REQUIRE(sorties.size() == 2);
  CHECK(sorties[0].pattern == RoutePattern::DropOnly);
  CHECK(sorties[1].pattern == RoutePattern::PickupOnly);
}

TEST_CASE("repair preserves customer order") {
  const Instance instance = make_instance(
      {depot(10, 0.0, 0.0)},
      {drop_task(1, 0.0, 1.0, 1.0), drop_task(2, 1.0, 0.0, 1.0),
       pickup_task(3, 0.0, 2.0, 1.0), pickdrop_task(4, 2.0, 0.0, 1.0, 1.0)});
  const auto sorties = repair({10, 3, 2, 4, 1, 10}, instance);
  std::vector<int> visited;
  for (const Sortie& s : sorties) {
    const auto seq = s.node_sequence();
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) visited.push_back(seq[i]);
  }
  CHECK(visited == std::vector<int>{3, 2, 4, 1});
}

TEST_CASE("repair is idempotent on its own output") {
  const Instance instance = make_instance(
      {depot(10, 0.0, 0.0)},
      {drop_task(1, 0.0, 5.0, 5.0), pickup_task(2, 0.0, 17.0, 2.0),
       drop_task(3, 3.0, 0.0, 1.0), pickdrop_task(4, 0.0, 4.0, 2.0, 2.0)});
  const auto sorties = repair({10, 1, 2, 3, 4, 10}, instance);
  for (const Sortie& s : sorties) {
    const auto again = repair(s.node_sequence(), instance);
    REQUIRE(again.size() == 1);
    CHECK(again[0].pattern == s.pattern);
    CHECK(same_legs(again[0], s));
    CHECK(again[0].distance_km == doctest::Approx(s.distance_km).epsilon(1e-12));
  }
}

TEST_CASE("repair names a task that cannot be served at all") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)}, {drop_task(7, 40.0, 0.0, 8.0)});
  try {
    repair({10, 7, 10}, instance);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("repair rejects malformed walks") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)}, {drop_task(1, 0.0, 3.0, 2.0)});
  CHECK_THROWS_AS(repair({10, 1}, instance), std::invalid_argument);
  CHECK_THROWS_AS(repair({1, 10, 1}, instance), std::invalid_argument);
  CHECK_THROWS_AS(repair({10}, instance), std::invalid_argument);
}

TEST_CASE("local search merges a lone drop with a lone pickup") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0)},
                    {drop_task(1, 0.0, 5.0, 2.0), pickup_task(2, 5.0, 0.0, 3.0)});
  Schedule schedule;
  DepotPlan plan;
  plan.depot_id = 10;
  plan.sorties = {
      make_single_sortie(instance.tasks[0], instance.depots[0], instance.drone),
      make_single_sortie(instance.tasks[1], instance.depots[0], instance.drone)};
  schedule.depot_plans = {plan};
  const double before = cached_cost(schedule, instance.weights);

  std::mt19937_64 rng(31);
  const Schedule after = local_search(schedule, instance, rng);
  CHECK(after.sortie_count() == 1);
  CHECK(after.depot_plans[0].sorties[0].pattern ==
        RoutePattern::DropThenPickup);
  CHECK(cached_cost(after, instance.weights) < before);
  CHECK(validate_schedule(instance, after).empty());
}

TEST_CASE("local search leaves un-mergeable schedules unchanged") {
  SUBCASE("only drops") {
    const Instance instance =
        make_instance({depot(10, 0.0, 0.0)},
                      {drop_task(1, 0.0, 5.0, 2.0), drop_task(2, 5.0, 0.0, 3.0)});
    Schedule schedule;
    DepotPlan plan;
    plan.depot_id = 10;
    plan.sorties = {make_single_sortie(instance.tasks[0], instance.depots[0],
                                       instance.drone),
                    make_single_sortie(instance.tasks[1], instance.depots[0],
                                       instance.drone)};
    schedule.depot_plans = {plan};
    std::mt19937_64 rng(1);
    CHECK(same_schedule(local_search(schedule, instance, rng), schedule));
  }

  SUBCASE("chain would not fly") {
    const Instance instance = make_instance(
        {depot(10, 0.0, 0.0)},
        {drop_task(1, 20.0, 0.0, 1.0), pickup_task(2, -20.0, 0.0, 1.0)});
    Schedule schedule;
    DepotPlan plan;
    plan.depot_id = 10;
    plan.sorties = {make_single_sortie(instance.tasks[0], instance.depots[0],
                                       instance.drone),
                    make_single_sortie(instance.tasks[1], instance.depots[0],
                                       instance.drone)};
    schedule.depot_plans = {plan};
    std::mt19937_64 rng(1);
    CHECK(same_schedule(local_search(schedule, instance, rng), schedule));
  }

  SUBCASE("empty schedule") {
    const Instance instance =
        make_instance({depot(10, 0.0, 0.0)}, {drop_task(1, 0.0, 5.0, 2.0)});
    std::mt19937_64 rng(1);
    CHECK(same_schedule(local_search(Schedule{}, instance, rng), Schedule{}));
  }
}

TEST_CASE("local search never raises the sortie count") {
  for (int i = 0; i < 40; ++i) {
    GenParams params;
    params.num_tasks = 6 + (i % 10);
    params.num_depots = 1 + (i % 3);
    params.seed = 3000 + static_cast<std::uint64_t>(i);
    const Instance instance = generate(params);

    std::mt19937_64 rng(static_cast<std::uint64_t>(i) + 5);
    const AllocationScheme scheme = initial_allocate(instance, rng);
    Schedule schedule = erpa_single(scheme, instance, rng);
    for (int round = 0; round < 25; ++round) {
      const int before = schedule.sortie_count();
      const double cost = cached_cost(schedule, instance.weights);
      schedule = local_search(schedule, instance, rng);
      CHECK(schedule.sortie_count() <= before);
      CHECK(cached_cost(schedule, instance.weights) <= cost + 1e-12);
      REQUIRE(validate_schedule(instance, schedule).empty());
    }
  }
}
