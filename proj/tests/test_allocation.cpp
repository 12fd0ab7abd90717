#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "alloc/allocation.hpp"
#include "core/validate.hpp"
#include "helpers.hpp"
#include "instances/generate.hpp"
#include "route/routing.hpp"
#include "util/random.hpp"

using namespace skyplan;
using namespace testutil;

namespace {

std::multiset<int> membership(const AllocationScheme& scheme) {
  std::multiset<int> ids;
  for (const auto& group : scheme.groups) {
    ids.insert(group.begin(), group.end());
  }
  return ids;
}

std::vector<std::multiset<int>> per_depot_sets(const AllocationScheme& scheme) {
  std::vector<std::multiset<int>> sets;
  for (const auto& group : scheme.groups) {
    sets.emplace_back(group.begin(), group.end());
  }
  return sets;
}

Instance random_instance(int tasks, int depots, std::uint64_t seed) {
  GenParams params;
  params.num_tasks = tasks;
  params.num_depots = depots;
  params.seed = seed;
  return generate(params);
}

}  // namespace

TEST_CASE("operator names are stable") {
  CHECK(to_string(OperatorKind::TwoExchange) == "2-exchange");
  CHECK(to_string(OperatorKind::ThreeExchange) == "3-exchange");
  CHECK(to_string(OperatorKind::Pct30Exchange) == "30%-exchange");
  CHECK(to_string(OperatorKind::Relocation) == "relocation");
  CHECK(to_string(OperatorKind::OtherRelocation) == "other-relocation");
  CHECK(to_string(OperatorKind::Pct10Relocation) == "10%-relocation");
}

TEST_CASE("initial allocation sends every task to its nearest depot") {
  const Instance instance = random_instance(20, 3, 5);
  std::mt19937_64 rng(1);
  const AllocationScheme scheme = initial_allocate(instance, rng);

  REQUIRE(scheme.groups.size() == instance.depots.size());
  CHECK(membership(scheme).size() == instance.tasks.size());

  for (std::size_t g = 0; g < scheme.groups.size(); ++g) {
    for (int id : scheme.groups[g]) {
      const Task& task = instance.task_by_id(id);
      const double here =
          distance_km(task.location, instance.depots[g].location);
      for (const Depot& other : instance.depots) {
        CHECK(here <= distance_km(task.location, other.location) + 1e-12);
      }
    }
  }
}

TEST_CASE("two clustered depots split the plane") {
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0), depot(11, 50.0, 50.0)},
                    {drop_task(1, 1.0, 1.0, 2.0), drop_task(2, 49.0, 49.0, 2.0),
                     pickup_task(3, 2.0, 0.0, 1.0)});
  std::mt19937_64 rng(3);
  const AllocationScheme scheme = initial_allocate(instance, rng);
  const auto sets = per_depot_sets(scheme);
  CHECK(sets[0] == std::multiset<int>{1, 3});
  CHECK(sets[1] == std::multiset<int>{2});
}

TEST_CASE("initial allocation shuffles the order within a depot") {
  const Instance instance = random_instance(20, 1, 9);
  std::mt19937_64 rng_a(1);
  std::mt19937_64 rng_b(2);
  const AllocationScheme a = initial_allocate(instance, rng_a);
  const AllocationScheme b = initial_allocate(instance, rng_b);
  CHECK(membership(a) == membership(b));
  CHECK(a.groups[0] != b.groups[0]);  // 20! orders; a collision means a bug
}

TEST_CASE("random allocation only uses depots that can serve the task") {
  // Heavy task near depot A: depot B is out of range, so every draw must
  // put it in A's group.
  const Instance instance =
      make_instance({depot(10, 0.0, 0.0), depot(11, 40.0, 0.0)},
                    {pickup_task(1, 1.0, 0.0, 8.0),  // range 15 km loaded
                     drop_task(2, 20.0, 0.0, 1.0)});
  bool task2_at_a = false;
  bool task2_at_b = false;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    const AllocationScheme scheme = random_feasible_allocate(instance, rng);
    const auto sets = per_depot_sets(scheme);
    CHECK(sets[0].count(1) == 1);
    CHECK(membership(scheme) == std::multiset<int>{1, 2});
    task2_at_a = task2_at_a || sets[0].count(2) == 1;
    task2_at_b = task2_at_b || sets[1].count(2) == 1;
  }
  // Task 2 is reachable from both depots, so both assignments must occur.
  CHECK(task2_at_a);
  CHECK(task2_at_b);
}

TEST_CASE("random allocation differs from nearest-depot clustering") {
  const Instance instance = random_instance(30, 4, 21);
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 20 && !differs; ++seed) {
    std::mt19937_64 rng_a(seed);
    std::mt19937_64 rng_b(seed);
    const auto nearest = per_depot_sets(initial_allocate(instance, rng_a));
    const auto random = per_depot_sets(random_feasible_allocate(instance, rng_b));
    differs = nearest != random;
  }
  CHECK(differs);
}

TEST_CASE("two-exchange swaps exactly one pair") {
  const Instance instance = random_instance(2, 1, 2);
  AllocationScheme scheme;
  scheme.groups = {{instance.tasks[0].id, instance.tasks[1].id}};
  std::mt19937_64 rng(7);
  const AllocationScheme after =
      apply_operator(OperatorKind::TwoExchange, scheme, instance, rng);
  CHECK(after.groups[0] ==
        std::vector<int>{instance.tasks[1].id, instance.tasks[0].id});
}

TEST_CASE("exchange operators keep depot membership") {
  const Instance instance = random_instance(25, 3, 13);
  std::mt19937_64 rng(99);
  AllocationScheme scheme = initial_allocate(instance, rng);
  const auto before_sets = per_depot_sets(scheme);

  for (OperatorKind kind :
       {OperatorKind::TwoExchange, OperatorKind::ThreeExchange,
        OperatorKind::Pct30Exchange}) {
    AllocationScheme current = scheme;
    for (int i = 0; i < 200; ++i) {
      current = apply_operator(kind, current, instance, rng);
      CHECK(per_depot_sets(current) == before_sets);
    }
  }
}

TEST_CASE("relocation moves only tasks of the right kind") {
  const Instance instance = make_instance(
      {depot(20, 0.0, 0.0), depot(21, 0.0, 10.0)},
      {pickup_task(1, 0.0, 2.0, 1.0), pickup_task(2, 0.0, 3.0, 1.0),
       drop_task(3, 0.0, 4.0, 1.0), pickdrop_task(4, 0.0, 5.0, 1.0, 1.0),
       drop_task(5, 0.0, 6.0, 1.0)});
  AllocationScheme scheme;
  scheme.groups = {{1, 2, 3}, {4, 5}};
  const auto all = membership(scheme);

  int pickup_moves = 0;
  int other_moves = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    const AllocationScheme after =
        apply_operator(OperatorKind::Relocation, scheme, instance, rng);
    CHECK(membership(after) == all);
    const auto sets = per_depot_sets(after);
    if (sets != per_depot_sets(scheme)) {
      ++pickup_moves;
      // Only the pickups 1 and 2 may change depot.
      CHECK(sets[1].count(3) == 0);
      CHECK(sets[0].count(4) == 0);
      CHECK(sets[0].count(5) == 0);
      CHECK(sets[1].count(1) + sets[1].count(2) == 1);
    }

    std::mt19937_64 rng2(seed);
    const AllocationScheme after2 =
        apply_operator(OperatorKind::OtherRelocation, scheme, instance, rng2);
    CHECK(membership(after2) == all);
    const auto sets2 = per_depot_sets(after2);
    if (sets2 != per_depot_sets(scheme)) {
      ++other_moves;
      // Only the drop/pick-drop tasks 3, 4, 5 may change depot.
      CHECK(sets2[1].count(1) == 0);
      CHECK(sets2[1].count(2) == 0);
    }
  }
  CHECK(pickup_moves > 0);
  CHECK(other_moves > 0);
}

TEST_CASE("relocation with a single depot is a no-op") {
  const Instance instance = random_instance(10, 1, 4);
  std::mt19937_64 rng(5);
  AllocationScheme scheme = initial_allocate(instance, rng);
  for (OperatorKind kind :
       {OperatorKind::Relocation, OperatorKind::OtherRelocation,
        OperatorKind::Pct10Relocation}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      std::mt19937_64 op_rng(seed);
      const AllocationScheme after =
          apply_operator(kind, scheme, instance, op_rng);
      CHECK(after.groups == scheme.groups);
    }
  }
}

TEST_CASE("relocation never sends a task out of range") {
  // The only pickup carries 8 kg (15 km effective range); the other depot
  // is 100 km away, so relocation must always fall back to a no-op.
  const Instance instance =
      make_instance({depot(20, 0.0, 0.0), depot(21, 100.0, 0.0)},
                    {pickup_task(1, 1.0, 0.0, 8.0), drop_task(2, 99.0, 0.0, 1.0)});
  AllocationScheme scheme;
  scheme.groups = {{1}, {2}};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    const AllocationScheme after =
        apply_operator(OperatorKind::Relocation, scheme, instance, rng);
    CHECK(after.groups == scheme.groups);
  }
}

TEST_CASE("ten-percent relocation moves the rounded share") {
  // Two depots 1 km apart, 20 light tasks each: ceil(0.1 * 20) = 2 tasks
  // must leave whichever depot is drawn.
  std::vector<Task> tasks;
  for (int i = 0; i < 40; ++i) {
    tasks.push_back(drop_task(i + 1, 0.05 * i, 0.0, 1.0));
  }
  const Instance instance =
      make_instance({depot(100, 0.0, 0.0), depot(101, 0.0, 1.0)}, tasks);
  AllocationScheme scheme;
  scheme.groups.resize(2);
  for (int i = 0; i < 40; ++i) scheme.groups[i % 2].push_back(i + 1);
  const auto before = per_depot_sets(scheme);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(seed);
    const AllocationScheme after =
        apply_operator(OperatorKind::Pct10Relocation, scheme, instance, rng);
    CHECK(membership(after) == membership(scheme));
    const auto sets = per_depot_sets(after);
    std::size_t moved_out = 0;
    for (int g = 0; g < 2; ++g) {
      for (int id : before[g]) {
        if (sets[g].count(id) == 0) ++moved_out;
      }
    }
    CHECK(moved_out == 2);
  }
}

TEST_CASE("every operator conserves the task multiset") {
  const Instance instance = random_instance(30, 4, 11);
  std::mt19937_64 rng(2);
  AllocationScheme scheme = initial_allocate(instance, rng);
  const auto all = membership(scheme);

  for (int i = 0; i < 2000; ++i) {
    const auto kind =
        static_cast<OperatorKind>(uniform_index(rng, kOperatorCount));
    scheme = apply_operator(kind, scheme, instance, rng);
    REQUIRE(membership(scheme) == all);
    REQUIRE(scheme.groups.size() == instance.depots.size());
  }
}

TEST_CASE("ivnd runs exactly the requested number of route builds") {
  const Instance instance = random_instance(8, 2, 3);
  const NodeLookup lookup(instance);
  std::mt19937_64 rng(17);
  AllocationScheme scheme = initial_allocate(instance, rng);
  Schedule incumbent = erpa_single(scheme, instance, lookup, rng);
  const double cost = cached_cost(incumbent, instance.weights);

  int builds = 0;
  const RouteBuilder builder = [&](const AllocationScheme& g,
                                 const AllocationScheme&,
                                 const Schedule&) {
    ++builds;
    return erpa_single(g, instance, lookup, rng);
  };

  const IvndResult result =
      ivnd(instance, scheme, incumbent, cost, 25, 1e-9, rng, builder);
  CHECK(builds == 25);
  REQUIRE(result.steps.size() == 25);

  // Replay the acceptance bookkeeping from the recorded steps.
  double current = cost;
  double best = cost;
  for (const IvndStep& step : result.steps) {
    if (step.candidate_cost < current) {
      CHECK(step.accepted);  // downhill moves always pass
    }
    if (step.accepted) {
      current = step.candidate_cost;
      best = std::min(best, current);
    }
  }
  CHECK(result.cost == doctest::Approx(current).epsilon(1e-12));
  CHECK(result.best_cost == doctest::Approx(best).epsilon(1e-12));
  CHECK(result.best_cost <= result.cost + 1e-12);
  CHECK(validate_schedule(instance, result.schedule).empty());
  CHECK(validate_schedule(instance, result.best_schedule).empty());
}

TEST_CASE("ivnd is deterministic for a fixed seed") {
  const Instance instance = random_instance(12, 3, 8);
  const NodeLookup lookup(instance);

  auto run = [&]() {
    std::mt19937_64 rng(4);
    AllocationScheme scheme = initial_allocate(instance, rng);
    Schedule incumbent = erpa_single(scheme, instance, lookup, rng);
    const double cost = cached_cost(incumbent, instance.weights);
    const RouteBuilder builder = [&](const AllocationScheme& g,
                                 const AllocationScheme&,
                                 const Schedule&) {
      return erpa_single(g, instance, lookup, rng);
    };
    return ivnd(instance, scheme, incumbent, cost, 20, 50.0, rng, builder);
  };

  const IvndResult a = run();
  const IvndResult b = run();
  CHECK(a.cost == b.cost);
  CHECK(a.best_cost == b.best_cost);
  CHECK(a.scheme.groups == b.scheme.groups);
  CHECK(same_schedule(a.schedule, b.schedule));
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].op == b.steps[i].op);
    CHECK(a.steps[i].candidate_cost == b.steps[i].candidate_cost);
    CHECK(a.steps[i].accepted == b.steps[i].accepted);
  }
}

TEST_CASE("ivnd keeps a single task at a single depot unchanged") {
  const Instance instance = random_instance(1, 1, 6);
  const NodeLookup lookup(instance);
  std::mt19937_64 rng(2);
  AllocationScheme scheme = initial_allocate(instance, rng);
  Schedule incumbent = erpa_single(scheme, instance, lookup, rng);
  const double cost = cached_cost(incumbent, instance.weights);
  const RouteBuilder builder = [&](const AllocationScheme& g,
                                 const AllocationScheme&,
                                 const Schedule&) {
    return erpa_single(g, instance, lookup, rng);
  };
  const IvndResult result =
      ivnd(instance, scheme, incumbent, cost, 30, 10.0, rng, builder);
  CHECK(result.scheme.groups == scheme.groups);
  CHECK(result.cost == doctest::Approx(cost).epsilon(1e-12));
}

TEST_CASE("ivnd rejects a non-positive iteration count") {
  const Instance instance = random_instance(3, 1, 1);
  std::mt19937_64 rng(1);
  AllocationScheme scheme = initial_allocate(instance, rng);
  Schedule incumbent = erpa_single(scheme, instance, rng);
  const double cost = cached_cost(incumbent, instance.weights);
  const RouteBuilder builder = [&](const AllocationScheme& g,
                                 const AllocationScheme&,
                                 const Schedule&) {
    return erpa_single(g, instance, rng);
  };
  CHECK_THROWS_AS(
      ivnd(instance, scheme, incumbent, cost, 0, 1.0, rng, builder),
      std::invalid_argument);
}
