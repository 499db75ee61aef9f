#pragma once

#include <vector>

#include "toricgp/nested/segre.hpp"

namespace toricgp {

// Minimal monomial generators of the K[phi_A]-module spanned by the
// y-monomials y^a with multidegree(y^a) + v = (k, ..., k) for some k. The
// candidates are enumerated for k = max(v), ..., max(v) + extra_levels and
// minimalized by divisibility; sorted. Throws BudgetExceeded past `cap`
// candidates and InvalidArgument for a negative or mis-sized v.
std::vector<Monomial> gamma_generators(const IntVector &v, const SegreIndex &idx,
                                       int extra_levels = 1,
                                       std::uint64_t cap = 1'000'000);

} // namespace toricgp
