#pragma once

#include <cstddef>

#include "toricgp/polytopes/subset_family.hpp"

namespace toricgp {

struct Prop63Report {
  bool pass = false;
  std::size_t y_points = 0; // distinct points of P_F, F = family_from_y(y)
  std::size_t z_points = 0; // points of the z-inequality description
};

// Distinct lattice points of sum_I y_I Delta_I against the solutions of
// sum_{i in I} t_i >= z_I, sum t = z_[n], with z_I = sum_{J in I} y_J.
// Throws BudgetExceeded for n > max_n.
Prop63Report cross_check_prop63(const YParameters &y, int max_n = 5);

} // namespace toricgp
