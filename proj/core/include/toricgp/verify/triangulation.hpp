#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "toricgp/lattice/int_vector.hpp"
#include "toricgp/polytopes/subset_family.hpp"

namespace toricgp {

// A triangulation by point indices; every simplex has dim + 1 vertices.
struct Triangulation {
  int dim = -1; // dimension of the affine hull; -1 for no points
  std::vector<std::vector<std::size_t>> simplices;
};

// Placing triangulation: points are inserted in the given order; a point
// outside the current affine hull is coned over every simplex, a point
// outside the current hull is coned over every boundary facet it sees, and
// a point inside the hull is skipped.
Triangulation placing_triangulation(const std::vector<IntVector> &points);

// Normalized volume of conv(vertices) in the lattice Z^N cap (its linear
// span of differences): the gcd of the maximal minors of the difference
// matrix. Throws InvalidArgument for affinely dependent vertices.
mpz_class normalized_volume(const std::vector<IntVector> &vertices);

struct UnimodularityReport {
  std::size_t points = 0;
  int dim = -1;
  std::size_t simplices = 0;
  bool pass = true;
  // First simplex of volume other than 1, as point indices.
  std::optional<std::vector<std::size_t>> witness;
  std::optional<mpz_class> witness_volume;
};

// Sorts the points lexicographically, triangulates by placing and checks
// that every simplex has normalized volume 1. Throws BudgetExceeded past
// `max_points` points.
UnimodularityReport unimodular_triangulation_probe(std::vector<IntVector> points,
                                                   std::size_t max_points = 64);
// On the edge polytope of the bipartite graph of F.
UnimodularityReport unimodular_triangulation_probe(const SubsetFamily &f);

} // namespace toricgp
