#include "bench/suite.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "bench/stats.hpp"
#include "core/validate.hpp"
#include "util/error.hpp"
#include "util/text.hpp"

namespace skyplan {

SuiteResult run_suite(const std::vector<SuiteConfig>& suite,
                      const std::vector<Variant>& variants, int repetitions,
                      std::uint64_t seed_base, const SaConfig& base_config,
                      const GenParams& proto) {
  if (suite.empty()) {
    throw std::invalid_argument("suite has no configurations");
  }
  if (repetitions < 1) {
    throw std::invalid_argument("need at least one repetition");
  }
  if (std::find(variants.begin(), variants.end(), Variant::Full) ==
      variants.end()) {
    throw std::invalid_argument(
        "variants must include 'full', the gap reference");
  }
  SuiteResult result;
  for (std::size_t ci = 0; ci < suite.size(); ++ci) {
    const SuiteConfig& config = suite[ci];
    GenParams params = proto;
    params.num_tasks = config.num_tasks;
    params.num_depots = config.num_depots;
    params.seed = seed_base + 1000 * (static_cast<std::uint64_t>(ci) + 1);
    params.name = config.label;
    const Instance instance = generate(params);

    std::vector<ConfigSummary> cell_summaries;
    double full_mean = 0.0;
    for (const Variant variant : variants) {
      std::vector<double> costs;
      double time_sum = 0.0;
      for (int rep = 0; rep < repetitions; ++rep) {
        SaConfig run_config = base_config;
        run_config.seed = seed_base + static_cast<std::uint64_t>(rep);
        const SolverReport report =
            solve_variant(instance, run_config, variant);
        if (!validate_schedule(instance, report.best_schedule).empty()) {
          throw std::logic_error("solver emitted an invalid schedule on " +
                                 config.label);
        }
        RunRecord record;
        record.instance = config.label;
        record.variant = variant;
        record.seed = run_config.seed;
        record.cost = report.best_cost;
        record.distance_km = report.best_schedule.total_distance_km();
        record.sorties = report.best_schedule.sortie_count();
        record.time_s = report.wall_time_s;
        result.records.push_back(std::move(record));
        costs.push_back(report.best_cost);
        time_sum += report.wall_time_s;
      }
      ConfigSummary summary;
      summary.instance = config.label;
      summary.variant = variant;
      summary.runs = repetitions;
      summary.min_cost = *std::min_element(costs.begin(), costs.end());
      summary.max_cost = *std::max_element(costs.begin(), costs.end());
      double sum = 0.0;
      for (const double v : costs) sum += v;
      summary.mean_cost = sum / static_cast<double>(costs.size());
      summary.mean_time_s = time_sum / static_cast<double>(costs.size());
      summary.cv = coefficient_of_variation(costs);
      if (variant == Variant::Full) full_mean = summary.mean_cost;
      cell_summaries.push_back(std::move(summary));
    }
    for (ConfigSummary& summary : cell_summaries) {
      summary.gap_vs_full = gap(summary.mean_cost, full_mean);
      result.summaries.push_back(std::move(summary));
    }
  }
  return result;
}

std::vector<SuiteConfig> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line != "label,num_tasks,num_depots") {
    throw ParseError(path + ": expected header label,num_tasks,num_depots");
  }
  std::vector<SuiteConfig> suite;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != 3) {
      throw ParseError(path + " row " + std::to_string(row) +
                       ": expected 3 columns");
    }
    const std::string ctx = path + " row " + std::to_string(row);
    SuiteConfig config;
    config.label = cells[0];
    config.num_tasks =
        static_cast<int>(parse_int(cells[1], ctx + " num_tasks"));
    config.num_depots =
        static_cast<int>(parse_int(cells[2], ctx + " num_depots"));
    if (config.label.empty() || config.num_tasks < 1 ||
        config.num_depots < 1) {
      throw ParseError(ctx + ": label must be nonempty and counts positive");
    }
    suite.push_back(std::move(config));
  }
  if (suite.empty()) {
    throw ParseError(path + ": suite has no configurations");
  }
  return suite;
}

void write_results_csv(const std::vector<RunRecord>& records,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FileError("cannot write " + path);
  }
  out << "instance,variant,seed,cost,distance_km,sorties,time_s\n";
  for (const RunRecord& r : records) {
    out << r.instance << ',' << to_string(r.variant) << ',' << r.seed << ','
        << format_double(r.cost) << ',' << format_double(r.distance_km) << ','
        << r.sorties << ',' << format_double(r.time_s) << '\n';
  }
  if (!out) {
    throw FileError("failed writing " + path);
  }
}

std::vector<RunRecord> read_results_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line) ||
      line != "instance,variant,seed,cost,distance_km,sorties,time_s") {
    throw ParseError(path + ": unexpected results header");
  }
  std::vector<RunRecord> records;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != 7) {
      throw ParseError(path + " row " + std::to_string(row) +
                       ": expected 7 columns");
    }
    const std::string ctx = path + " row " + std::to_string(row);
    RunRecord r;
    r.instance = cells[0];
    r.variant = variant_from_string(cells[1]);
    r.seed = static_cast<std::uint64_t>(parse_int(cells[2], ctx + " seed"));
    r.cost = parse_double(cells[3], ctx + " cost");
    r.distance_km = parse_double(cells[4], ctx + " distance_km");
    r.sorties = static_cast<int>(parse_int(cells[5], ctx + " sorties"));
    r.time_s = parse_double(cells[6], ctx + " time_s");
    records.push_back(std::move(r));
  }
  return records;
}

void write_summary_csv(const std::vector<ConfigSummary>& summaries,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FileError("cannot write " + path);
  }
  out << "# cv = population standard deviation / mean; gap_vs_full = "
         "(mean_cost - full mean_cost) / mean_cost\n";
  out << "instance,variant,runs,min_cost,max_cost,mean_cost,mean_time_s,cv,"
         "gap_vs_full\n";
  for (const ConfigSummary& s : summaries) {
    out << s.instance << ',' << to_string(s.variant) << ',' << s.runs << ','
        << format_double(s.min_cost) << ',' << format_double(s.max_cost)
        << ',' << format_double(s.mean_cost) << ','
        << format_double(s.mean_time_s) << ',' << format_double(s.cv) << ','
        << format_double(s.gap_vs_full) << '\n';
  }
  if (!out) {
    throw FileError("failed writing " + path);
  }
}

}  // namespace skyplan
