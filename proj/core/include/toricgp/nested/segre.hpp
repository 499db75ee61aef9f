#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "toricgp/groebner/groebner_basis.hpp"
#include "toricgp/lattice/monomial_order.hpp"
#include "toricgp/lattice/variable_index.hpp"
#include "toricgp/polytopes/subset_family.hpp"

namespace toricgp {

// The rings of the nested construction for A = {(1, ..., 1)}:
//   K[x]  x_{j_1..j_m}, one per tuple of S_1 x ... x S_m (odometer order)
//   K[y]  y_j^{(i)} for j in S_i, ordered by i, then j
//   K[z]  z_1..z_n, and w_1..w_m for the copy grading of K[y].
// phi_A(x_t) = y_{t_1}^{(1)} ... y_{t_m}^{(m)},  phi_B(y_j^{(i)}) = z_j w_i,
// psi(x_t) = z_{t_1} ... z_{t_m}.
class SegreIndex {
public:
  explicit SegreIndex(SubsetFamily f, std::uint64_t cap = 1'000'000);

  const SubsetFamily &family() const { return f_; }
  std::size_t m() const { return f_.m(); }
  std::size_t x_count() const { return tuples_.size(); }
  std::size_t y_count() const { return y_labels_.size(); }

  const std::vector<int> &tuple(std::size_t x) const { return tuples_.at(x); }
  const std::vector<std::vector<int>> &tuples() const { return tuples_; }
  std::size_t x_of(const std::vector<int> &tuple) const;
  std::size_t y_of(std::size_t copy, int j) const; // copy is 0-based
  // (copy, j) of a y-variable, copy 0-based.
  std::pair<std::size_t, int> y_label(std::size_t y) const;

  std::shared_ptr<const VariableIndex> x_variables() const { return x_vars_; }
  std::shared_ptr<const VariableIndex> y_variables() const { return y_vars_; }

  Monomial phi_a(const Monomial &x) const;
  // Exponent vector in Z^{n+m}: ground coordinates, then copies.
  IntVector phi_b(const Monomial &y) const;
  IntVector psi(const Monomial &x) const;
  // Copy grading of a y-monomial.
  IntVector multidegree(const Monomial &y) const;
  // The sum of the indices of x_t as a point of Z^n.
  IntVector point_of(std::size_t x) const;

  // Lex on K[y] with y^{(1)} > y^{(2)} > ..., and inside one copy larger
  // ground index first. Its minimal tuple in a point fiber is the
  // lexicographically smallest.
  MonomialOrder y_order() const;
  // Grevlex on K[x] in odometer order. The last variable of any four
  // a, b, a^b, avb is avb, so x_a x_b is the lead of every sorting binomial.
  MonomialOrder sorting_order() const;
  // x^u > x^v iff phi_a(u) > phi_a(v) in y_order, ties broken by
  // sorting_order.
  MonomialOrder composite_order() const;

private:
  SubsetFamily f_;
  std::vector<std::vector<int>> tuples_;
  std::vector<std::size_t> radix_;     // mixed-radix strides of the odometer
  std::vector<std::size_t> y_offset_;  // first y-variable of each copy
  std::vector<std::pair<std::size_t, int>> y_labels_;
  std::shared_ptr<const VariableIndex> x_vars_, y_vars_;
};

// a ^ b and a v b, coordinatewise.
std::vector<int> tuple_meet(const std::vector<int> &a, const std::vector<int> &b);
std::vector<int> tuple_join(const std::vector<int> &a, const std::vector<int> &b);

// { x_a x_b - x_{a^b} x_{avb} : a, b incomparable }, leads x_a x_b, under
// sorting_order(). Sorted by lead ascending.
GroebnerBasis segre_sorting_gb(const SegreIndex &idx);

// The unique preimage under phi_A that is standard for the sorting basis:
// sort the copy-i indices of each y-monomial and read off the chain of
// tuples. Throws InvalidArgument unless every term has multidegree
// (k, ..., k) for one k.
Polynomial lift(const Polynomial &q, const SegreIndex &idx);
Monomial lift_monomial(const Monomial &y, const SegreIndex &idx);

} // namespace toricgp
