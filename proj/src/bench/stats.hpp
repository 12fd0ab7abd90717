#pragma once

#include <vector>

namespace skyplan {

// Relative improvement of the reference over the other algorithm,
// (cost_other - cost_reference) / cost_other: positive when the reference
// is cheaper. The other cost must be positive.
double gap(double cost_other, double cost_reference);

// Population standard deviation divided by the mean. Needs a nonempty
// sample with positive mean.
double coefficient_of_variation(const std::vector<double>& values);

}  // namespace skyplan
