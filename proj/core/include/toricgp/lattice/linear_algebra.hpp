#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "toricgp/lattice/rational.hpp"

namespace toricgp {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix &a,
                                                  const std::vector<Rational> &b);

std::size_t matrix_rank(RationalMatrix a);

// Exact determinant of a square integer matrix (fraction-free elimination).
mpz_class determinant(IntegerMatrix a);

// Incremental rank of a set of sparse rational vectors, kept in echelon form
// keyed by pivot coordinate.
class SparseRank {
public:
  using Vector = std::map<std::size_t, Rational>;

  // Returns true when v is independent of the vectors added so far.
  bool add(Vector v);
  std::size_t rank() const { return rows_.size(); }

private:
  std::map<std::size_t, Vector> rows_; // pivot -> row with leading 1
};

// Rank of vectors of the form e_a - e_b (or e_a alone) by union-find:
// such vectors form a graphic matroid with an extra ground node.
class GraphicRank {
public:
  explicit GraphicRank(std::size_t nodes);

  // e_a - e_b; returns true when independent.
  bool add_difference(std::size_t a, std::size_t b);
  // e_a.
  bool add_unit(std::size_t a);
  std::size_t rank() const { return rank_; }

private:
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

  std::vector<std::size_t> parent_;
  std::size_t rank_ = 0;
};

} // namespace toricgp
