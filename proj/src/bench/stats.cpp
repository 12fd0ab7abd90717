#include "bench/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace skyplan {

double gap(double cost_other, double cost_reference) {
  if (!(cost_other > 0.0)) {
    throw std::invalid_argument("gap needs a positive comparison cost");
  }
  return (cost_other - cost_reference) / cost_other;
}

double coefficient_of_variation(const std::vector<double>& values) {
  if (values.empty()) {
    throw std::invalid_argument("coefficient of variation of nothing");
  }
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (!(mean > 0.0)) {
    throw std::invalid_argument(
        "coefficient of variation needs a positive mean");
  }
  double var = 0.0;
  for (const double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return std::sqrt(var) / mean;
}

}  // namespace skyplan
