#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "vortex/cones.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

oracle::Matrix random_matrix(Rng& rng, int k, int n, int lo, int hi);
// Matrix whose columns span R^k.
oracle::Matrix random_effective_matrix(Rng& rng, int k, int n, int lo, int hi);
// Nonnegative integer combination of the columns with coefficients in [0, max_coef].
vortex::SigmaVector random_combination(Rng& rng, const oracle::Matrix& q, int max_coef);
// Entries a + b*pi with a in [lo, hi] and b in {-1, 0, 1} when with_pi is set.
vortex::SigmaVector random_vector(Rng& rng, int k, int lo, int hi, bool with_pi);

}  // namespace gen
