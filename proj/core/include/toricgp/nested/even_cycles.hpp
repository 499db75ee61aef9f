#pragma once

#include <optional>
#include <vector>

#include "toricgp/groebner/buchberger.hpp"
#include "toricgp/groebner/groebner_basis.hpp"
#include "toricgp/nested/segre.hpp"

namespace toricgp {

// Reduced Groebner basis of ker phi_B (the toric ideal of the Cayley sum of
// the simplices Delta_{S_i}) in the y-variables of idx.
GroebnerBasis even_cycle_gb(const SegreIndex &idx, const MonomialOrder &order,
                            const BuchbergerOptions &options = {});

// A closed walk in the bipartite graph of F, alternating copy and ground
// vertices: copies[k] -- grounds[k] -- copies[k+1] -- ..., closing up at
// copies[0]. Copies are 0-based, ground indices 1-based.
struct BipartiteCycle {
  std::vector<std::size_t> copies;
  std::vector<int> grounds;
};

// The cycle of a binomial y^u - y^v whose two monomials are disjoint,
// squarefree matchings covering the same vertices and forming one cycle;
// nullopt otherwise.
std::optional<BipartiteCycle> cycle_of_binomial(const Polynomial &f,
                                                const SegreIndex &idx);

// prod_k y_{grounds[k]}^{(copies[k])} - prod_k y_{grounds[k]}^{(copies[k+1])}.
Polynomial cycle_binomial(const BipartiteCycle &c, const SegreIndex &idx);

} // namespace toricgp
