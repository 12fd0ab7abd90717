#include "util/random.hpp"

#include <numeric>

namespace skyplan {

std::vector<std::size_t> sample_positions(std::mt19937_64& rng, std::size_t n,
                                          std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) k = n;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t r = j + uniform_index(rng, n - j);
    std::swap(idx[j], idx[r]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace skyplan
