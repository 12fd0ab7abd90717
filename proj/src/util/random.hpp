#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace skyplan {

// std::mt19937_64 output is pinned by the standard, but the standard
// distributions are not. These helpers keep every random choice
// bit-reproducible across standard libraries. The modulo bias is ~n/2^64,
// far below anything observable here.

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates, one draw per position from the back.
template <typename T>
void shuffle_vec(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = uniform_index(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

// First k entries of a random k-subset of {0, ..., n-1}, in draw order.
std::vector<std::size_t> sample_positions(std::mt19937_64& rng, std::size_t n,
                                          std::size_t k);

}  // namespace skyplan
