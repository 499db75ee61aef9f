#pragma once

#include <optional>
#include <vector>

#include "toricgp/groebner/buchberger.hpp"
#include "toricgp/groebner/groebner_basis.hpp"
#include "toricgp/lattice/int_vector.hpp"
#include "toricgp/lattice/rational.hpp"

namespace toricgp {

// A rational c with c . a = 1 for every point, or nullopt when the points
// do not lie on a common affine hyperplane avoiding the origin.
std::optional<std::vector<Rational>>
configuration_hyperplane(const std::vector<IntVector> &points);
bool is_configuration(const std::vector<IntVector> &points);

// pi(x^u) = sum_i u_i a_i.
IntVector monomial_image(const Monomial &u, const std::vector<IntVector> &points);

// Reduced Groebner basis of I_A under `x_order`, by eliminating t from
// < x_i - t^{a_i} > in K[t, x] with the block order (t-degree, grevlex in t,
// then x_order). Variables are x[1..N] in point order. Throws
// InvalidArgument when A is not a configuration.
GroebnerBasis toric_ideal_elimination(const std::vector<IntVector> &points,
                                      const MonomialOrder &x_order =
                                          MonomialOrder::grevlex(),
                                      const BuchbergerOptions &options = {},
                                      BuchbergerStats *stats = nullptr);

} // namespace toricgp
