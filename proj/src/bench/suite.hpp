#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "instances/generate.hpp"
#include "solver/solver.hpp"

namespace skyplan {

// One solver run inside a benchmark sweep.
struct RunRecord {
  std::string instance;
  Variant variant = Variant::Full;
  std::uint64_t seed = 0;
  double cost = 0.0;
  double distance_km = 0.0;
  int sorties = 0;
  double time_s = 0.0;
};

// Aggregate over the repetitions of one (configuration, variant) cell.
struct ConfigSummary {
  std::string instance;
  Variant variant = Variant::Full;
  int runs = 0;
  double min_cost = 0.0;
  double max_cost = 0.0;
  double mean_cost = 0.0;
  double mean_time_s = 0.0;
  double cv = 0.0;
  // (mean_variant - mean_full) / mean_variant; 0 for the full row itself.
  double gap_vs_full = 0.0;
};

struct SuiteResult {
  std::vector<RunRecord> records;
  std::vector<ConfigSummary> summaries;
};

// Full sweep: one seeded instance per configuration, every variant run
// `repetitions` times with paired seeds (seed_base, seed_base+1, ...), all
// schedules validated before anything is recorded. `variants` must include
// Variant::Full, the gap reference.
SuiteResult run_suite(const std::vector<SuiteConfig>& suite,
                      const std::vector<Variant>& variants, int repetitions,
                      std::uint64_t seed_base, const SaConfig& base_config,
                      const GenParams& proto);

// Suite file: CSV with header label,num_tasks,num_depots.
std::vector<SuiteConfig> load_suite(const std::string& path);

void write_results_csv(const std::vector<RunRecord>& records,
                       const std::string& path);
std::vector<RunRecord> read_results_csv(const std::string& path);

void write_summary_csv(const std::vector<ConfigSummary>& summaries,
                       const std::string& path);

}  // namespace skyplan
