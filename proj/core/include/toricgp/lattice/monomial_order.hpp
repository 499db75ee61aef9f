#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricgp/lattice/int_vector.hpp"

namespace toricgp {

enum class Cmp { Less, Equal, Greater };

enum class OrderKind { Lex, GrevLex, Weighted, BlockElimination, Marked };

enum class Tiebreak { Lex, GrevLex };

// A monomial order on exponent vectors, with variable 0 the largest variable
// for lex and grevlex.
//
//  - Weighted: nonnegative integer weight rows compared in sequence, then the
//    tiebreak order. Nonnegative rows keep 1 minimal, so every weighted order
//    is a term order.
//  - BlockElimination: the first `block` variables form the eliminated block.
//    Compares total degree in the block, then grevlex inside the block, then
//    the tail order on the remaining variables.
//  - Marked: no comparator. Bases built under a marked order carry their
//    leading terms explicitly.
class MonomialOrder {
public:
  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder weighted(std::vector<std::vector<std::int64_t>> rows,
                                Tiebreak tiebreak = Tiebreak::GrevLex);
  // Lex order in which ranking[0] is the largest variable, ranking[1] the
  // next, and so on. ranking must be a permutation of 0..nvars-1.
  static MonomialOrder lex_ranking(const std::vector<std::size_t> &ranking);
  static MonomialOrder block_elimination(std::size_t block,
                                         MonomialOrder tail);
  static MonomialOrder marked();

  OrderKind kind() const { return kind_; }
  bool is_total() const { return kind_ != OrderKind::Marked; }

  // Throws DimensionMismatch on differing dimensions (or rows of the wrong
  // length) and InvalidArgument for a marked order.
  Cmp compare(const Monomial &a, const Monomial &b) const;
  Cmp compare(std::span<const Exponent> a, std::span<const Exponent> b) const;
  bool greater(const Monomial &a, const Monomial &b) const {
    return compare(a, b) == Cmp::Greater;
  }

  const std::vector<std::vector<std::int64_t>> &rows() const { return rows_; }
  Tiebreak tiebreak() const { return tiebreak_; }
  std::size_t block() const { return block_; }
  const MonomialOrder &tail() const;

  // The same order restricted to the variables listed in `kept`, which must
  // be increasing. Weighted rows keep only the listed columns; lex and
  // grevlex restrict to themselves. Block orders are not restrictable.
  MonomialOrder restricted(const std::vector<std::size_t> &kept) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder &a, const MonomialOrder &b);

private:
  MonomialOrder() = default;

  Cmp compare_unchecked(std::span<const Exponent> a,
                        std::span<const Exponent> b) const;

  OrderKind kind_ = OrderKind::GrevLex;
  Tiebreak tiebreak_ = Tiebreak::GrevLex;
  std::vector<std::vector<std::int64_t>> rows_;
  // Sparse copy of rows_ used by the comparator.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> sparse_;
  std::size_t block_ = 0;
  std::shared_ptr<const MonomialOrder> tail_;
};

Cmp compare_lex(std::span<const Exponent> a, std::span<const Exponent> b);
Cmp compare_grevlex(std::span<const Exponent> a, std::span<const Exponent> b);

} // namespace toricgp
