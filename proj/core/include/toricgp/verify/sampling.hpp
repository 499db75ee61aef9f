#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toricgp/polytopes/subset_family.hpp"

namespace toricgp {

struct SamplingOptions {
  int n = 4;
  int max_m = 4;
  std::uint64_t max_product = 200;
};

// A family of 1..max_m uniformly random nonempty subsets of [n], redrawn
// until prod |S_i| <= max_product.
SubsetFamily random_family(std::mt19937_64 &rng, const SamplingOptions &options);

// `count` families from mt19937_64(seed), all distinct.
std::vector<SubsetFamily> sample_families(std::uint64_t seed, std::size_t count,
                                          const SamplingOptions &options);

// For every building set on [n] and every y in {0..max_y} on its blocks
// (singletons included when with_singletons is set), the y-parameters,
// each distinct y once. A y of all zeros is skipped.
std::vector<YParameters> building_set_parameters(int n, int max_y,
                                                 bool with_singletons);

} // namespace toricgp
