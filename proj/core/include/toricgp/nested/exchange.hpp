#pragma once

#include <cstdint>
#include <vector>

#include "toricgp/nested/segre.hpp"

namespace toricgp {

// x_a x_b -> x_{a'} x_{b'} where a', b' swap position `position`. a and b
// may be rearrangements (sort-equal tuples) of the current factors, so each
// step is a move modulo J followed by one exchange quadric.
struct ExchangeStep {
  std::vector<int> a, b;
  std::size_t position = 0;
};

struct ExchangeTrace {
  std::vector<ExchangeStep> steps;
  // The left side after all exchanges, and the right side, as factor lists
  // paired by position.
  std::vector<std::vector<int>> left, right;
  // Every left factor equals its right partner (the residual is zero).
  bool residual_zero = false;
  // Every left factor has the same index multiset as its right partner, so
  // the residual lies in J = < x_a - x_b : sort(a) = sort(b) >.
  bool residual_in_j = false;
};

// Rewrites the left monomial of b = x^u - x^v by exchange quadrics, modulo
// J, until its factors are sort-equal to those of x^v. Breadth-first search
// over the index multisets of the factors, so the trace is as short as
// possible. Throws InvalidArgument unless b is a homogeneous binomial with
// psi(u) = psi(v), and BudgetExceeded when more than `budget` states are
// visited. When no sequence exists the trace is empty and residual_in_j is
// false.
ExchangeTrace exchange_reduce(const Polynomial &b, const SegreIndex &idx,
                              std::uint64_t budget = 1'000'000);

} // namespace toricgp
