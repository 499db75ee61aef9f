#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "toricgp/groebner/groebner_basis.hpp"

namespace toricgp {

struct BuchbergerOptions {
  std::size_t max_basis = 20'000;
  // Largest lcm degree of a processed pair (and of any input).
  std::int64_t max_degree = 30;
  // Positive variable weights for the degree used in pair selection and in
  // max_degree; empty means total degree.
  std::vector<std::int64_t> weights;
  // Gebauer-Moeller pair update; the coprime criterion is always applied.
  bool chain_criterion = true;
  // Use rational polynomial reduction even when every input is a binomial.
  bool force_general = false;
};

struct BuchbergerStats {
  bool binomial_path = false;
  std::size_t pairs_processed = 0;
  std::size_t pairs_coprime = 0;
  std::size_t pairs_chain = 0;
  std::size_t zero_reductions = 0;
  std::size_t elements_added = 0;
};

// Reduced Groebner basis of the ideal generated by `gens` under `order`.
// Elements are monic and sorted by increasing leading monomial. Pairs are
// processed by increasing (weighted) lcm degree, ties broken by element indices; input
// generators enter the queue at their degree, ahead of pairs of that degree.
// Throws BudgetExceeded when a cap in `options` is hit.
GroebnerBasis buchberger(const std::vector<Polynomial> &gens,
                         const MonomialOrder &order,
                         const BuchbergerOptions &options = {},
                         BuchbergerStats *stats = nullptr);

// Same for binomial input given as pairs (u, v) meaning x^u - x^v. Avoids
// building rational polynomials for large inputs. Pairs with u == v are
// dropped.
GroebnerBasis buchberger_binomial(std::size_t nvars,
                                  const std::vector<std::pair<Monomial, Monomial>> &gens,
                                  const MonomialOrder &order,
                                  const BuchbergerOptions &options = {},
                                  BuchbergerStats *stats = nullptr);

} // namespace toricgp
