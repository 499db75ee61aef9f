#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "toricgp/lattice/monomial_order.hpp"
#include "toricgp/lattice/polynomial.hpp"
#include "toricgp/lattice/variable_index.hpp"

namespace toricgp {

// A basis element with its designated leading monomial. For total orders
// the lead is the order-maximal term; poly is monic in the lead.
struct GbElement {
  Polynomial poly;
  Monomial lead;

  // lead - poly, so that poly = lead - tail().
  Polynomial tail() const;
  bool is_pure_binomial() const;

  friend bool operator==(const GbElement &, const GbElement &) = default;
};

struct GroebnerBasis {
  std::vector<GbElement> elements;
  MonomialOrder order = MonomialOrder::grevlex();
  bool reduced = false;
  std::size_t nvars = 0;
  std::shared_ptr<const VariableIndex> variables;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  std::vector<Polynomial> polynomials() const;
  std::int64_t max_degree() const;
  // Every element is x^u - x^v or a monomial.
  bool all_binomial() const;
};

// Minimalized, sorted (plain lexicographic exponent order) generators.
struct MonomialIdeal {
  std::size_t nvars = 0;
  std::vector<Monomial> generators;

  static MonomialIdeal from_generators(std::size_t nvars,
                                       std::vector<Monomial> gens);
  bool contains(const Monomial &m) const;
  std::size_t size() const { return generators.size(); }
};

// Caps the number of rewrite steps in normal_form; marked bases have no
// termination guarantee of their own.
inline constexpr std::uint64_t kDefaultRewriteBudget = 50'000'000;

// Remainder of f on division by G. Under a total order the top term is
// reduced first, then the remaining terms in decreasing order. Under a
// marked order any term divisible by a designated lead is rewritten.
// Throws BudgetExceeded when the rewrite budget runs out.
Polynomial normal_form(const Polynomial &f, const GroebnerBasis &g,
                       std::uint64_t budget = kDefaultRewriteBudget);

// Normal form of a single monomial against a basis of pure binomials (and
// monomials); nullopt when it reduces to zero.
std::optional<Monomial> monomial_normal_form(const Monomial &m,
                                             const GroebnerBasis &g);

// S-polynomial of two elements with respect to their designated leads.
Polynomial s_polynomial(const GbElement &a, const GbElement &b);

struct ConfluenceAudit {
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t failures = 0;
  // First failing pair (indices into G) and its nonzero remainder.
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<Polynomial> witness_remainder;

  bool confluent() const { return failures == 0; }
};

// Reduces every S-pair with normal_form. Coprime pairs count as skipped
// (they always reduce to zero). Stops after `max_failures` failures.
ConfluenceAudit audit_confluence(const GroebnerBasis &g,
                                 std::size_t max_failures = 1);

MonomialIdeal initial_ideal(const GroebnerBasis &g);
bool is_squarefree(const MonomialIdeal &ideal);
// is_squarefree(initial_ideal(g)), without minimalizing when every lead is
// already squarefree.
bool has_squarefree_initial_ideal(const GroebnerBasis &g);

// Mutual containment by normal forms. Both bases must be Groebner bases.
bool ideal_equal(const GroebnerBasis &a, const GroebnerBasis &b);

} // namespace toricgp
