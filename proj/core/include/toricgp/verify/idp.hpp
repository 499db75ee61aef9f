#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricgp/lattice/int_vector.hpp"
#include "toricgp/polytopes/subset_family.hpp"

namespace toricgp {

struct IdpStep {
  int k = 0;
  std::size_t sumset_points = 0; // |P + ... + P| (k copies)
  std::size_t dilate_points = 0; // |kP cap Z^n|
  bool pass = false;
};

struct IdpReport {
  int k_max = 0;
  bool pass = true;
  std::vector<IdpStep> steps;
  // First k that fails and a point of kP that is no sum of k points of P.
  std::optional<int> failing_k;
  std::optional<IntVector> counterexample;
};

inline constexpr std::uint64_t kDefaultIdpCap = 2'000'000;

// For k = 2..k_max compares the k-fold sumset of the points of P_F with the
// points of P_{kF}. For generalized permutohedra both sides are lattice
// point sets and equality for all k is IDP. Throws InvalidArgument for
// k_max < 2 and BudgetExceeded past `cap` points on either side.
IdpReport idp_check(const SubsetFamily &f, int k_max,
                    std::uint64_t cap = kDefaultIdpCap);

// The same comparison for explicit lattice point sets: dilates[k-1] holds
// the points of kP, dilates[0] those of P.
IdpReport idp_check_raw(const std::vector<std::vector<IntVector>> &dilates,
                        std::uint64_t cap = kDefaultIdpCap);

// Some k points of `points` summing to p, found by depth-first search with
// nondecreasing indices; nullopt when there are none.
std::optional<std::vector<IntVector>>
decompose(const IntVector &p, const std::vector<IntVector> &points, int k);

} // namespace toricgp
