#pragma once

#include <cstdint>
#include <vector>

#include "toricgp/lattice/int_vector.hpp"

namespace toricgp {

inline constexpr std::uint64_t kDefaultNestedCap = 1'000'000;

// One element of A[B_1, ..., B_s]: the point sum_i sum_j a_j^{(i)} b_j^{(i)}
// together with its exponent table and the row of A it comes from.
struct NestedElement {
  IntVector point;
  std::size_t a_index = 0;
  // exponents[i][j] = a_j^{(i)}; row i sums to A[a_index][i].
  std::vector<std::vector<Exponent>> exponents;
};

struct NestedConfiguration {
  std::vector<IntVector> a;
  std::vector<std::vector<IntVector>> b;
  std::vector<NestedElement> elements;

  std::vector<IntVector> points() const;
};

// The multiset A[B_1, ..., B_s]: for every a in A and every choice of
// nonnegative a_j^{(i)} with sum_j a_j^{(i)} = a_i. Elements are listed by
// row of A, then by the exponent tables in lexicographically decreasing
// order. For A = {(1, ..., 1)} this is the Minkowski sumset with
// multiplicity. Throws BudgetExceeded past `cap` elements.
NestedConfiguration nested_configuration(const std::vector<IntVector> &a,
                                         const std::vector<std::vector<IntVector>> &b,
                                         std::uint64_t cap = kDefaultNestedCap);

} // namespace toricgp
