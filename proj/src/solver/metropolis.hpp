#pragma once

#include <cmath>
#include <random>
#include <stdexcept>

#include "util/random.hpp"

namespace skyplan {

// Annealing acceptance rule: downhill moves always pass; uphill moves pass
// with probability exp(-df/t). The random draw happens only on the uphill
// branch, which keeps rng streams aligned for testing.
inline bool metropolis_accept(double df, double t, std::mt19937_64& rng) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("temperature must be positive");
  }
  if (df < 0.0) return true;
  const double p = std::exp(-df / t);
  return uniform_unit(rng) <= p;
}

}  // namespace skyplan
