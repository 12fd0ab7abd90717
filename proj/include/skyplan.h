/* skyplan: multi-depot drone pickup-and-delivery scheduling.
 *
 * C interface of the shared library. All objects are opaque handles owned
 * by the library; every fallible call returns a status code and leaves a
 * human-readable message in skyplan_last_error() (thread-local). Pointers
 * returned through out-parameters are owned by the caller and released
 * with the matching *_free function.
 */
#ifndef SKYPLAN_H
#define SKYPLAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skyplan_status {
  SKYPLAN_OK = 0,
  SKYPLAN_ERR_INVALID_ARGUMENT = 1, /* bad parameter or null handle */
  SKYPLAN_ERR_PARSE = 2,            /* malformed input file */
  SKYPLAN_ERR_VALIDATION = 3,       /* data breaks a model constraint */
  SKYPLAN_ERR_IO = 4,               /* file cannot be read or written */
  SKYPLAN_ERR_UNSUPPORTED = 5,      /* request outside supported limits */
  SKYPLAN_ERR_INTERNAL = 6          /* unexpected failure (library bug) */
} skyplan_status;

typedef struct skyplan_instance skyplan_instance;
typedef struct skyplan_schedule skyplan_schedule;
typedef struct skyplan_report skyplan_report;

const char* skyplan_version(void);

/* Message describing the most recent failure on this thread. Never null;
 * empty string when no error occurred yet. Valid until the next failing
 * call on the same thread. */
const char* skyplan_last_error(void);

/* ---- instances ---------------------------------------------------- */

typedef struct skyplan_gen_params {
  int32_t num_tasks;
  int32_t num_depots;
  double area_km;        /* side of the square region */
  double weight_min_kg;  /* package weight bounds */
  double weight_max_kg;
  double p_drop;         /* task kind mix, sums to 1 */
  double p_pickup;
  double p_pickdrop;
  double max_range_km;   /* drone: unloaded flying range */
  double max_capacity_kg;
  double beta_max;       /* range penalty factor at full load */
  double alpha;          /* objective: distance weight */
  double rho;            /* objective: per-sortie weight */
  uint64_t seed;
  const char* name;      /* optional instance name, may be NULL */
} skyplan_gen_params;

/* Fills in the documented defaults (40 tasks, 5 depots, 50 km square,
 * weights 1..8 kg, uniform kind mix, range 30 km, capacity 8 kg,
 * beta_max 2, alpha 0.9, rho 0.1, seed 1). */
void skyplan_gen_params_init(skyplan_gen_params* params);

skyplan_status skyplan_instance_generate(const skyplan_gen_params* params,
                                         skyplan_instance** out);
skyplan_status skyplan_instance_load(const char* path,
                                     skyplan_instance** out);
skyplan_status skyplan_instance_save(const skyplan_instance* instance,
                                     const char* path);
void skyplan_instance_free(skyplan_instance* instance);

int32_t skyplan_instance_num_tasks(const skyplan_instance* instance);
int32_t skyplan_instance_num_depots(const skyplan_instance* instance);
const char* skyplan_instance_name(const skyplan_instance* instance);

/* ---- solving ------------------------------------------------------ */

typedef enum skyplan_variant {
  SKYPLAN_VARIANT_FULL = 0,        /* whole pipeline */
  SKYPLAN_VARIANT_NO_LS = 1,       /* skip the merge local search */
  SKYPLAN_VARIANT_RANDOM_INIT = 2, /* random instead of nearest-depot init */
  SKYPLAN_VARIANT_ERPA_ONLY = 3    /* stop after initial construction */
} skyplan_variant;

typedef struct skyplan_solve_config {
  double t0;                /* initial temperature */
  double t_end;             /* terminating temperature */
  double q;                 /* geometric cooling rate in (0,1) */
  int32_t inner_iterations; /* neighborhood moves per temperature */
  int32_t n_starts;         /* construction multi-start count */
  uint64_t seed;
} skyplan_solve_config;

/* Defaults: t0 1000, t_end 1e-7, q 0.93, 20 inner iterations,
 * 10 starts, seed 1. */
void skyplan_solve_config_init(skyplan_solve_config* config);

/* Runs are deterministic: identical instance, config and variant produce
 * identical reports, schedules and traces. */
skyplan_status skyplan_solve(const skyplan_instance* instance,
                             const skyplan_solve_config* config,
                             skyplan_variant variant, skyplan_report** out);

void skyplan_report_free(skyplan_report* report);
double skyplan_report_best_cost(const skyplan_report* report);
double skyplan_report_initial_cost(const skyplan_report* report);
double skyplan_report_wall_time_s(const skyplan_report* report);
size_t skyplan_report_trace_size(const skyplan_report* report);
skyplan_status skyplan_report_trace_row(const skyplan_report* report,
                                        size_t index, int32_t* iteration,
                                        double* temperature,
                                        double* incumbent_cost,
                                        double* best_cost);
/* Moves the best schedule out of the report; the report keeps working for
 * everything except a second take. */
skyplan_status skyplan_report_take_schedule(skyplan_report* report,
                                            skyplan_schedule** out);
skyplan_status skyplan_report_write_trace_csv(const skyplan_report* report,
                                              const char* path);

/* ---- schedules ---------------------------------------------------- */

skyplan_status skyplan_schedule_load(const char* path,
                                     const skyplan_instance* instance,
                                     skyplan_schedule** out);
skyplan_status skyplan_schedule_save(const skyplan_schedule* schedule,
                                     const skyplan_instance* instance,
                                     const char* path);
void skyplan_schedule_free(skyplan_schedule* schedule);

double skyplan_schedule_distance_km(const skyplan_schedule* schedule);
int32_t skyplan_schedule_sortie_count(const skyplan_schedule* schedule);
skyplan_status skyplan_schedule_objective(const skyplan_schedule* schedule,
                                          const skyplan_instance* instance,
                                          double* out);

/* Checks every constraint (depot anchoring, exactly-once coverage, route
 * patterns, flying range under load, capacity). num_violations receives
 * the count; report_text (optional, may be NULL) receives a newline-
 * separated description to release with skyplan_string_free. A schedule
 * with violations still returns SKYPLAN_OK: violations are data. */
skyplan_status skyplan_validate(const skyplan_instance* instance,
                                const skyplan_schedule* schedule,
                                int32_t* num_violations, char** report_text);
void skyplan_string_free(char* text);

/* ---- benchmarking ------------------------------------------------- */

/* Exhaustive optimum for tiny instances (at most 6 tasks, 2 depots);
 * larger inputs return SKYPLAN_ERR_UNSUPPORTED. out_schedule may be NULL
 * when only the cost is wanted. */
skyplan_status skyplan_oracle_solve(const skyplan_instance* instance,
                                    double* optimal_cost,
                                    skyplan_schedule** out_schedule);

/* (cost_other - cost_reference) / cost_other; cost_other must be > 0. */
skyplan_status skyplan_gap(double cost_other, double cost_reference,
                           double* out);

/* Population standard deviation over mean; needs count >= 1, mean > 0. */
skyplan_status skyplan_coefficient_of_variation(const double* values,
                                                size_t count, double* out);

typedef struct skyplan_bench_options {
  /* CSV of configurations (header label,num_tasks,num_depots);
   * NULL selects the built-in 13-configuration suite. */
  const char* suite_path;
  /* Comma-separated variant names; must include "full" (gap reference). */
  const char* variants;
  int32_t repetitions;
  uint64_t seed_base;
  skyplan_solve_config solve;
  const char* results_csv_path; /* per-run records; NULL to skip */
  const char* summary_csv_path; /* per-config aggregates; NULL to skip */
} skyplan_bench_options;

/* Defaults: built-in suite, "full", 3 repetitions, seed_base 1, default
 * solve config, no output paths. */
void skyplan_bench_options_init(skyplan_bench_options* options);

skyplan_status skyplan_bench_run(const skyplan_bench_options* options);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SKYPLAN_H */
