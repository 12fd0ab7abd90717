// Command-line front end for the skyplan shared library. Talks to the
// solver exclusively through the public C interface.

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "skyplan.h"

namespace {

// Exit codes: 0 success, 1 a validated schedule had violations,
// 2 any input or usage error.
constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;

int fail(skyplan_status status) {
  std::fprintf(stderr, "error: %s\n", skyplan_last_error());
  return status == SKYPLAN_OK ? kExitOk : kExitInputError;
}

bool parse_variant(const std::string& token, skyplan_variant* out) {
  if (token == "full") {
    *out = SKYPLAN_VARIANT_FULL;
  } else if (token == "no_ls") {
    *out = SKYPLAN_VARIANT_NO_LS;
  } else if (token == "random_init") {
    *out = SKYPLAN_VARIANT_RANDOM_INIT;
  } else if (token == "erpa_only") {
    *out = SKYPLAN_VARIANT_ERPA_ONLY;
  } else {
    std::fprintf(stderr, "error: unknown variant '%s'\n", token.c_str());
    return false;
  }
  return true;
}

void add_solve_flags(CLI::App* cmd, skyplan_solve_config* config) {
  cmd->add_option("--t0", config->t0, "Initial temperature");
  cmd->add_option("--t-end", config->t_end, "Terminating temperature");
  cmd->add_option("--q", config->q, "Geometric cooling rate in (0,1)");
  cmd->add_option("--L", config->inner_iterations,
                  "Neighborhood moves per temperature");
  cmd->add_option("--n-starts", config->n_starts,
                  "Construction multi-start count");
  cmd->add_option("--seed", config->seed, "Random seed");
}

struct InstanceHandle {
  skyplan_instance* ptr = nullptr;
  ~InstanceHandle() { skyplan_instance_free(ptr); }
};

struct ScheduleHandle {
  skyplan_schedule* ptr = nullptr;
  ~ScheduleHandle() { skyplan_schedule_free(ptr); }
};

struct ReportHandle {
  skyplan_report* ptr = nullptr;
  ~ReportHandle() { skyplan_report_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-depot drone pickup-and-delivery scheduler"};
  app.set_version_flag("--version", std::string(skyplan_version()));
  app.require_subcommand(1);

  // generate
  skyplan_gen_params gen_params;
  skyplan_gen_params_init(&gen_params);
  std::string gen_out;
  std::string gen_name;
  auto* generate =
      app.add_subcommand("generate", "Write a random instance file");
  generate->add_option("output", gen_out, "Instance file to write")
      ->required();
  generate->add_option("--tasks", gen_params.num_tasks, "Number of tasks");
  generate->add_option("--depots", gen_params.num_depots,
                       "Number of depots");
  generate->add_option("--area", gen_params.area_km,
                       "Side of the square region in km");
  generate->add_option("--weight-min", gen_params.weight_min_kg,
                       "Minimum package weight in kg");
  generate->add_option("--weight-max", gen_params.weight_max_kg,
                       "Maximum package weight in kg");
  generate->add_option("--p-drop", gen_params.p_drop,
                       "Fraction of delivery tasks");
  generate->add_option("--p-pickup", gen_params.p_pickup,
                       "Fraction of pickup tasks");
  generate->add_option("--p-pickdrop", gen_params.p_pickdrop,
                       "Fraction of combined tasks");
  generate->add_option("--range", gen_params.max_range_km,
                       "Unloaded flying range in km");
  generate->add_option("--capacity", gen_params.max_capacity_kg,
                       "Drone capacity in kg");
  generate->add_option("--beta-max", gen_params.beta_max,
                       "Range penalty factor at full load");
  generate->add_option("--alpha", gen_params.alpha,
                       "Objective weight of distance");
  generate->add_option("--rho", gen_params.rho,
                       "Objective weight of sortie count");
  generate->add_option("--seed", gen_params.seed, "Random seed");
  generate->add_option("--name", gen_name, "Instance name");

  // solve
  std::string solve_instance;
  std::string solve_out = "schedule.json";
  std::string solve_trace = "trace.csv";
  std::string solve_variant_name = "full";
  skyplan_solve_config solve_config;
  skyplan_solve_config_init(&solve_config);
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", solve_instance, "Instance file")->required();
  solve->add_option("--out", solve_out, "Schedule file to write");
  solve->add_option("--trace", solve_trace, "Convergence trace CSV to write");
  solve->add_option("--variant", solve_variant_name,
                    "full | no_ls | random_init | erpa_only");
  add_solve_flags(solve, &solve_config);

  // validate
  std::string val_instance;
  std::string val_schedule;
  auto* validate =
      app.add_subcommand("validate", "Check a schedule against an instance");
  validate->add_option("instance", val_instance, "Instance file")
      ->required();
  validate->add_option("schedule", val_schedule, "Schedule file")
      ->required();

  // bench
  std::string bench_suite = "builtin";
  std::string bench_variants = "full";
  int bench_reps = 3;
  std::uint64_t bench_seed_base = 1;
  std::string bench_results = "results.csv";
  std::string bench_summary = "summary.csv";
  skyplan_solve_config bench_config;
  skyplan_solve_config_init(&bench_config);
  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep");
  bench->add_option("--suite", bench_suite,
                    "'builtin' or a CSV of label,num_tasks,num_depots");
  bench->add_option("--variants", bench_variants,
                    "Comma-separated variants; must include full");
  bench->add_option("--reps", bench_reps, "Runs per variant and instance");
  bench->add_option("--seed-base", bench_seed_base,
                    "Base seed for instances and runs");
  bench->add_option("--results", bench_results, "Per-run records CSV");
  bench->add_option("--summary", bench_summary, "Per-config summary CSV");
  add_solve_flags(bench, &bench_config);

  // oracle
  std::string oracle_instance;
  std::string oracle_out;
  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive optimum for a tiny instance file");
  oracle->add_option("instance", oracle_instance, "Instance file")
      ->required();
  oracle->add_option("--out", oracle_out, "Optional schedule file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*generate) {
    if (!gen_name.empty()) gen_params.name = gen_name.c_str();
    InstanceHandle instance;
    if (auto s = skyplan_instance_generate(&gen_params, &instance.ptr)) {
      return fail(s);
    }
    if (auto s = skyplan_instance_save(instance.ptr, gen_out.c_str())) {
      return fail(s);
    }
    std::printf("wrote %s: %d tasks, %d depots\n", gen_out.c_str(),
                skyplan_instance_num_tasks(instance.ptr),
                skyplan_instance_num_depots(instance.ptr));
    return kExitOk;
  }

  if (*solve) {
    skyplan_variant variant = SKYPLAN_VARIANT_FULL;
    if (!parse_variant(solve_variant_name, &variant)) return kExitInputError;
    InstanceHandle instance;
    if (auto s = skyplan_instance_load(solve_instance.c_str(),
                                       &instance.ptr)) {
      return fail(s);
    }
    ReportHandle report;
    if (auto s = skyplan_solve(instance.ptr, &solve_config, variant,
                               &report.ptr)) {
      return fail(s);
    }
    if (auto s = skyplan_report_write_trace_csv(report.ptr,
                                                solve_trace.c_str())) {
      return fail(s);
    }
    ScheduleHandle schedule;
    if (auto s = skyplan_report_take_schedule(report.ptr, &schedule.ptr)) {
      return fail(s);
    }
    if (auto s = skyplan_schedule_save(schedule.ptr, instance.ptr,
                                       solve_out.c_str())) {
      return fail(s);
    }
    std::printf("cost %.6f (initial %.6f), distance %.6f km, %d sorties, "
                "%.3f s\n",
                skyplan_report_best_cost(report.ptr),
                skyplan_report_initial_cost(report.ptr),
                skyplan_schedule_distance_km(schedule.ptr),
                skyplan_schedule_sortie_count(schedule.ptr),
                skyplan_report_wall_time_s(report.ptr));
    std::printf("wrote %s and %s\n", solve_out.c_str(), solve_trace.c_str());
    return kExitOk;
  }

  if (*validate) {
    InstanceHandle instance;
    if (auto s =
            skyplan_instance_load(val_instance.c_str(), &instance.ptr)) {
      return fail(s);
    }
    ScheduleHandle schedule;
    if (auto s = skyplan_schedule_load(val_schedule.c_str(), instance.ptr,
                                       &schedule.ptr)) {
      return fail(s);
    }
    int32_t count = 0;
    char* text = nullptr;
    if (auto s =
            skyplan_validate(instance.ptr, schedule.ptr, &count, &text)) {
      return fail(s);
    }
    if (count == 0) {
      std::printf("valid: no violations\n");
      skyplan_string_free(text);
      return kExitOk;
    }
    std::printf("%d violation%s:\n%s", count, count == 1 ? "" : "s", text);
    skyplan_string_free(text);
    return kExitViolations;
  }

  if (*bench) {
    skyplan_bench_options options;
    skyplan_bench_options_init(&options);
    options.suite_path =
        bench_suite == "builtin" ? nullptr : bench_suite.c_str();
    options.variants = bench_variants.c_str();
    options.repetitions = bench_reps;
    options.seed_base = bench_seed_base;
    options.solve = bench_config;
    options.results_csv_path = bench_results.c_str();
    options.summary_csv_path = bench_summary.c_str();
    if (auto s = skyplan_bench_run(&options)) return fail(s);
    std::printf("wrote %s and %s\n", bench_results.c_str(),
                bench_summary.c_str());
    return kExitOk;
  }

  if (*oracle) {
    InstanceHandle instance;
    if (auto s =
            skyplan_instance_load(oracle_instance.c_str(), &instance.ptr)) {
      return fail(s);
    }
    double cost = 0.0;
    ScheduleHandle schedule;
    skyplan_schedule** out = oracle_out.empty() ? nullptr : &schedule.ptr;
    if (auto s = skyplan_oracle_solve(instance.ptr, &cost, out)) {
      return fail(s);
    }
    std::printf("optimal cost %.6f\n", cost);
    if (!oracle_out.empty()) {
      if (auto s = skyplan_schedule_save(schedule.ptr, instance.ptr,
                                         oracle_out.c_str())) {
        return fail(s);
      }
      std::printf("wrote %s\n", oracle_out.c_str());
    }
    return kExitOk;
  }

  return kExitInputError;
}
