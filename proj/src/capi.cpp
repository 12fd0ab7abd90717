#include "skyplan.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "bench/oracle.hpp"
#include "bench/stats.hpp"
#include "bench/suite.hpp"
#include "core/validate.hpp"
#include "instances/generate.hpp"
#include "instances/io.hpp"
#include "solver/solver.hpp"
#include "util/error.hpp"
#include "util/text.hpp"

struct skyplan_instance {
  skyplan::Instance value;
};

struct skyplan_schedule {
  skyplan::Schedule value;
};

struct skyplan_report {
  skyplan::SolverReport value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Maps the library's exception taxonomy onto status codes; must wrap the
// body of every fallible entry point so exceptions never cross the ABI.
template <typename Fn>
skyplan_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const skyplan::ParseError& e) {
    set_error(e.what());
    return SKYPLAN_ERR_PARSE;
  } catch (const skyplan::ValidationError& e) {
    set_error(e.what());
    return SKYPLAN_ERR_VALIDATION;
  } catch (const skyplan::FileError& e) {
    set_error(e.what());
    return SKYPLAN_ERR_IO;
  } catch (const skyplan::SizeLimitError& e) {
    set_error(e.what());
    return SKYPLAN_ERR_UNSUPPORTED;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return SKYPLAN_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SKYPLAN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SKYPLAN_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return SKYPLAN_ERR_INTERNAL;
  }
}

skyplan_status require(bool ok, const char* message) {
  if (ok) return SKYPLAN_OK;
  set_error(message);
  return SKYPLAN_ERR_INVALID_ARGUMENT;
}

skyplan::SaConfig to_config(const skyplan_solve_config& c) {
  skyplan::SaConfig config;
  config.t0 = c.t0;
  config.t_end = c.t_end;
  config.q = c.q;
  config.inner_iterations = c.inner_iterations;
  config.n_starts = c.n_starts;
  config.seed = c.seed;
  return config;
}

skyplan::Variant to_variant(skyplan_variant v) {
  switch (v) {
    case SKYPLAN_VARIANT_FULL:
      return skyplan::Variant::Full;
    case SKYPLAN_VARIANT_NO_LS:
      return skyplan::Variant::NoLs;
    case SKYPLAN_VARIANT_RANDOM_INIT:
      return skyplan::Variant::RandomInit;
    case SKYPLAN_VARIANT_ERPA_ONLY:
      return skyplan::Variant::ErpaOnly;
  }
  throw std::invalid_argument("unknown variant code");
}

}  // namespace

const char* skyplan_version(void) { return "1.0.0"; }

const char* skyplan_last_error(void) { return g_last_error.c_str(); }

void skyplan_gen_params_init(skyplan_gen_params* params) {
  if (params == nullptr) return;
  const skyplan::GenParams defaults;
  params->num_tasks = defaults.num_tasks;
  params->num_depots = defaults.num_depots;
  params->area_km = defaults.area_km;
  params->weight_min_kg = defaults.weight_min_kg;
  params->weight_max_kg = defaults.weight_max_kg;
  params->p_drop = defaults.p_drop;
  params->p_pickup = defaults.p_pickup;
  params->p_pickdrop = defaults.p_pickdrop;
  params->max_range_km = defaults.drone.max_range_km;
  params->max_capacity_kg = defaults.drone.max_capacity_kg;
  params->beta_max = defaults.drone.beta_max;
  params->alpha = defaults.weights.alpha;
  params->rho = defaults.weights.rho;
  params->seed = defaults.seed;
  params->name = nullptr;
}

skyplan_status skyplan_instance_generate(const skyplan_gen_params* params,
                                         skyplan_instance** out) {
  if (auto s = require(params != nullptr && out != nullptr,
                       "generate needs params and an out pointer")) {
    return s;
  }
  return guarded([&] {
    skyplan::GenParams p;
    p.num_tasks = params->num_tasks;
    p.num_depots = params->num_depots;
    p.area_km = params->area_km;
    p.weight_min_kg = params->weight_min_kg;
    p.weight_max_kg = params->weight_max_kg;
    p.p_drop = params->p_drop;
    p.p_pickup = params->p_pickup;
    p.p_pickdrop = params->p_pickdrop;
    p.drone.max_range_km = params->max_range_km;
    p.drone.max_capacity_kg = params->max_capacity_kg;
    p.drone.beta_max = params->beta_max;
    p.weights.alpha = params->alpha;
    p.weights.rho = params->rho;
    p.seed = params->seed;
    if (params->name != nullptr) p.name = params->name;
    *out = new skyplan_instance{skyplan::generate(p)};
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_instance_load(const char* path,
                                     skyplan_instance** out) {
  if (auto s = require(path != nullptr && out != nullptr,
                       "load needs a path and an out pointer")) {
    return s;
  }
  return guarded([&] {
    *out = new skyplan_instance{skyplan::load_instance(path)};
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_instance_save(const skyplan_instance* instance,
                                     const char* path) {
  if (auto s = require(instance != nullptr && path != nullptr,
                       "save needs an instance and a path")) {
    return s;
  }
  return guarded([&] {
    skyplan::save_instance(instance->value, path);
    return SKYPLAN_OK;
  });
}

void skyplan_instance_free(skyplan_instance* instance) { delete instance; }

int32_t skyplan_instance_num_tasks(const skyplan_instance* instance) {
  if (instance == nullptr) return 0;
  return static_cast<int32_t>(instance->value.tasks.size());
}

int32_t skyplan_instance_num_depots(const skyplan_instance* instance) {
  if (instance == nullptr) return 0;
  return static_cast<int32_t>(instance->value.depots.size());
}

const char* skyplan_instance_name(const skyplan_instance* instance) {
  if (instance == nullptr) return "";
  return instance->value.name.c_str();
}

void skyplan_solve_config_init(skyplan_solve_config* config) {
  if (config == nullptr) return;
  const skyplan::SaConfig defaults;
  config->t0 = defaults.t0;
  config->t_end = defaults.t_end;
  config->q = defaults.q;
  config->inner_iterations = defaults.inner_iterations;
  config->n_starts = defaults.n_starts;
  config->seed = defaults.seed;
}

skyplan_status skyplan_solve(const skyplan_instance* instance,
                             const skyplan_solve_config* config,
                             skyplan_variant variant, skyplan_report** out) {
  if (auto s =
          require(instance != nullptr && config != nullptr && out != nullptr,
                  "solve needs an instance, a config and an out pointer")) {
    return s;
  }
  return guarded([&] {
    skyplan::SolverReport report = skyplan::solve_variant(
        instance->value, to_config(*config), to_variant(variant));
    *out = new skyplan_report{std::move(report)};
    return SKYPLAN_OK;
  });
}

void skyplan_report_free(skyplan_report* report) { delete report; }

double skyplan_report_best_cost(const skyplan_report* report) {
  if (report == nullptr) return 0.0;
  return report->value.best_cost;
}

double skyplan_report_initial_cost(const skyplan_report* report) {
  if (report == nullptr) return 0.0;
  return report->value.initial_cost;
}

double skyplan_report_wall_time_s(const skyplan_report* report) {
  if (report == nullptr) return 0.0;
  return report->value.wall_time_s;
}

size_t skyplan_report_trace_size(const skyplan_report* report) {
  if (report == nullptr) return 0;
  return report->value.trace.size();
}

skyplan_status skyplan_report_trace_row(const skyplan_report* report,
                                        size_t index, int32_t* iteration,
                                        double* temperature,
                                        double* incumbent_cost,
                                        double* best_cost) {
  if (auto s = require(report != nullptr, "trace_row needs a report")) {
    return s;
  }
  if (auto s = require(index < report->value.trace.size(),
                       "trace row index out of range")) {
    return s;
  }
  const skyplan::TracePoint& p = report->value.trace[index];
  if (iteration != nullptr) *iteration = p.iteration;
  if (temperature != nullptr) *temperature = p.temperature;
  if (incumbent_cost != nullptr) *incumbent_cost = p.incumbent_cost;
  if (best_cost != nullptr) *best_cost = p.best_cost;
  return SKYPLAN_OK;
}

skyplan_status skyplan_report_take_schedule(skyplan_report* report,
                                            skyplan_schedule** out) {
  if (auto s = require(report != nullptr && out != nullptr,
                       "take_schedule needs a report and an out pointer")) {
    return s;
  }
  return guarded([&] {
    *out = new skyplan_schedule{std::move(report->value.best_schedule)};
    report->value.best_schedule = skyplan::Schedule{};
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_report_write_trace_csv(const skyplan_report* report,
                                              const char* path) {
  if (auto s = require(report != nullptr && path != nullptr,
                       "write_trace_csv needs a report and a path")) {
    return s;
  }
  return guarded([&] {
    skyplan::write_trace_csv(report->value.trace, path);
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_schedule_load(const char* path,
                                     const skyplan_instance* instance,
                                     skyplan_schedule** out) {
  if (auto s =
          require(path != nullptr && instance != nullptr && out != nullptr,
                  "schedule_load needs a path, an instance and an out "
                  "pointer")) {
    return s;
  }
  return guarded([&] {
    *out = new skyplan_schedule{
        skyplan::load_schedule(path, instance->value)};
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_schedule_save(const skyplan_schedule* schedule,
                                     const skyplan_instance* instance,
                                     const char* path) {
  if (auto s =
          require(schedule != nullptr && instance != nullptr &&
                      path != nullptr,
                  "schedule_save needs a schedule, an instance and a path")) {
    return s;
  }
  return guarded([&] {
    skyplan::save_schedule(schedule->value, instance->value, path);
    return SKYPLAN_OK;
  });
}

void skyplan_schedule_free(skyplan_schedule* schedule) { delete schedule; }

double skyplan_schedule_distance_km(const skyplan_schedule* schedule) {
  if (schedule == nullptr) return 0.0;
  return schedule->value.total_distance_km();
}

int32_t skyplan_schedule_sortie_count(const skyplan_schedule* schedule) {
  if (schedule == nullptr) return 0;
  return schedule->value.sortie_count();
}

skyplan_status skyplan_schedule_objective(const skyplan_schedule* schedule,
                                          const skyplan_instance* instance,
                                          double* out) {
  if (auto s = require(schedule != nullptr && instance != nullptr &&
                           out != nullptr,
                       "objective needs a schedule, an instance and an out "
                       "pointer")) {
    return s;
  }
  return guarded([&] {
    *out = skyplan::objective(schedule->value, instance->value);
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_validate(const skyplan_instance* instance,
                                const skyplan_schedule* schedule,
                                int32_t* num_violations, char** report_text) {
  if (auto s = require(instance != nullptr && schedule != nullptr &&
                           num_violations != nullptr,
                       "validate needs an instance, a schedule and a count "
                       "pointer")) {
    return s;
  }
  return guarded([&] {
    const std::vector<skyplan::Violation> violations =
        skyplan::validate_schedule(instance->value, schedule->value);
    *num_violations = static_cast<int32_t>(violations.size());
    if (report_text != nullptr) {
      std::ostringstream text;
      for (const skyplan::Violation& v : violations) {
        text << skyplan::to_string(v) << '\n';
      }
      const std::string str = text.str();
      char* buffer = new char[str.size() + 1];
      std::memcpy(buffer, str.c_str(), str.size() + 1);
      *report_text = buffer;
    }
    return SKYPLAN_OK;
  });
}

void skyplan_string_free(char* text) { delete[] text; }

skyplan_status skyplan_oracle_solve(const skyplan_instance* instance,
                                    double* optimal_cost,
                                    skyplan_schedule** out_schedule) {
  if (auto s = require(instance != nullptr && optimal_cost != nullptr,
                       "oracle needs an instance and a cost pointer")) {
    return s;
  }
  return guarded([&] {
    skyplan::OracleResult result =
        skyplan::brute_force_oracle(instance->value);
    *optimal_cost = result.cost;
    if (out_schedule != nullptr) {
      *out_schedule = new skyplan_schedule{std::move(result.schedule)};
    }
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_gap(double cost_other, double cost_reference,
                           double* out) {
  if (auto s = require(out != nullptr, "gap needs an out pointer")) {
    return s;
  }
  return guarded([&] {
    *out = skyplan::gap(cost_other, cost_reference);
    return SKYPLAN_OK;
  });
}

skyplan_status skyplan_coefficient_of_variation(const double* values,
                                                size_t count, double* out) {
  if (auto s = require(values != nullptr && out != nullptr,
                       "coefficient_of_variation needs values and an out "
                       "pointer")) {
    return s;
  }
  return guarded([&] {
    *out = skyplan::coefficient_of_variation(
        std::vector<double>(values, values + count));
    return SKYPLAN_OK;
  });
}

void skyplan_bench_options_init(skyplan_bench_options* options) {
  if (options == nullptr) return;
  options->suite_path = nullptr;
  options->variants = "full";
  options->repetitions = 3;
  options->seed_base = 1;
  skyplan_solve_config_init(&options->solve);
  options->results_csv_path = nullptr;
  options->summary_csv_path = nullptr;
}

skyplan_status skyplan_bench_run(const skyplan_bench_options* options) {
  if (auto s = require(options != nullptr && options->variants != nullptr,
                       "bench needs options with a variants list")) {
    return s;
  }
  return guarded([&] {
    std::vector<skyplan::SuiteConfig> suite =
        options->suite_path == nullptr
            ? skyplan::builtin_suite()
            : skyplan::load_suite(options->suite_path);
    std::vector<skyplan::Variant> variants;
    for (const std::string& token :
         skyplan::split_csv_line(options->variants)) {
      variants.push_back(skyplan::variant_from_string(token));
    }
    const skyplan::GenParams proto;
    const skyplan::SuiteResult result = skyplan::run_suite(
        suite, variants, options->repetitions, options->seed_base,
        to_config(options->solve), proto);
    if (options->results_csv_path != nullptr) {
      skyplan::write_results_csv(result.records, options->results_csv_path);
    }
    if (options->summary_csv_path != nullptr) {
      skyplan::write_summary_csv(result.summaries,
                                 options->summary_csv_path);
    }
    return SKYPLAN_OK;
  });
}
