#include "toricgp/lattice/monomial_order.hpp"

#include <algorithm>

#include "toricgp/errors.hpp"

namespace toricgp {

Cmp compare_lex(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i])
      return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

Cmp compare_grevlex(std::span<const Exponent> a, std::span<const Exponent> b) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db)
    return da > db ? Cmp::Greater : Cmp::Less;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i])
      return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = OrderKind::Lex;
  o.tiebreak_ = Tiebreak::Lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() {
  MonomialOrder o;
  o.kind_ = OrderKind::GrevLex;
  o.tiebreak_ = Tiebreak::GrevLex;
  return o;
}

MonomialOrder
MonomialOrder::weighted(std::vector<std::vector<std::int64_t>> rows,
                        Tiebreak tiebreak) {
  MonomialOrder o;
  o.kind_ = OrderKind::Weighted;
  o.tiebreak_ = tiebreak;
  for (const auto &row : rows) {
    if (!rows.empty() && row.size() != rows.front().size())
      throw InvalidArgument("weight rows have differing lengths");
    std::vector<std::pair<std::uint32_t, std::int64_t>> sparse;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 0)
        throw InvalidArgument("weight rows must be nonnegative");
      if (row[i] != 0)
        sparse.emplace_back(static_cast<std::uint32_t>(i), row[i]);
    }
    o.sparse_.push_back(std::move(sparse));
  }
  o.rows_ = std::move(rows);
  return o;
}

MonomialOrder
MonomialOrder::lex_ranking(const std::vector<std::size_t> &ranking) {
  const std::size_t n = ranking.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(n);
  for (std::size_t v : ranking) {
    if (v >= n || seen[v])
      throw InvalidArgument("lex ranking is not a permutation");
    seen[v] = true;
    std::vector<std::int64_t> row(n, 0);
    row[v] = 1;
    rows.push_back(std::move(row));
  }
  return weighted(std::move(rows), Tiebreak::Lex);
}

MonomialOrder MonomialOrder::block_elimination(std::size_t block,
                                               MonomialOrder tail) {
  if (!tail.is_total())
    throw InvalidArgument("block elimination needs a total tail order");
  MonomialOrder o;
  o.kind_ = OrderKind::BlockElimination;
  o.block_ = block;
  o.tail_ = std::make_shared<const MonomialOrder>(std::move(tail));
  return o;
}

MonomialOrder MonomialOrder::marked() {
  MonomialOrder o;
  o.kind_ = OrderKind::Marked;
  return o;
}

const MonomialOrder &MonomialOrder::tail() const {
  if (!tail_)
    throw InvalidArgument("order has no tail block");
  return *tail_;
}

Cmp MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
  return compare(a.entries(), b.entries());
}

Cmp MonomialOrder::compare(std::span<const Exponent> a,
                           std::span<const Exponent> b) const {
  if (kind_ == OrderKind::Marked)
    throw InvalidArgument("a marked order has no comparator");
  if (a.size() != b.size())
    throw DimensionMismatch("monomials over different variable counts");
  if (kind_ == OrderKind::Weighted && !rows_.empty() &&
      rows_.front().size() != a.size())
    throw DimensionMismatch("weight rows do not match the variable count");
  if (kind_ == OrderKind::BlockElimination && block_ > a.size())
    throw DimensionMismatch("elimination block larger than the ring");
  return compare_unchecked(a, b);
}

Cmp MonomialOrder::compare_unchecked(std::span<const Exponent> a,
                                     std::span<const Exponent> b) const {
  switch (kind_) {
  case OrderKind::Lex:
    return compare_lex(a, b);
  case OrderKind::GrevLex:
    return compare_grevlex(a, b);
  case OrderKind::Weighted:
    for (const auto &row : sparse_) {
      std::int64_t diff = 0;
      for (auto [i, w] : row)
        diff += w * (static_cast<std::int64_t>(a[i]) - b[i]);
      if (diff != 0)
        return diff > 0 ? Cmp::Greater : Cmp::Less;
    }
    return tiebreak_ == Tiebreak::Lex ? compare_lex(a, b)
                                      : compare_grevlex(a, b);
  case OrderKind::BlockElimination: {
    auto ta = a.first(block_), tb = b.first(block_);
    if (Cmp c = compare_grevlex(ta, tb); c != Cmp::Equal)
      return c;
    return tail_->compare(a.subspan(block_), b.subspan(block_));
  }
  case OrderKind::Marked:
    break;
  }
  throw InvalidArgument("a marked order has no comparator");
}

MonomialOrder
MonomialOrder::restricted(const std::vector<std::size_t> &kept) const {
  if (!std::is_sorted(kept.begin(), kept.end()))
    throw InvalidArgument("restriction indices must be increasing");
  switch (kind_) {
  case OrderKind::Lex:
  case OrderKind::GrevLex:
  case OrderKind::Marked:
    return *this;
  case OrderKind::Weighted: {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto &row : rows_) {
      std::vector<std::int64_t> r;
      r.reserve(kept.size());
      for (std::size_t k : kept)
        r.push_back(row.at(k));
      rows.push_back(std::move(r));
    }
    return weighted(std::move(rows), tiebreak_);
  }
  case OrderKind::BlockElimination:
    break;
  }
  throw InvalidArgument("block elimination orders cannot be restricted");
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
  case OrderKind::Lex:
    return "lex";
  case OrderKind::GrevLex:
    return "grevlex";
  case OrderKind::Weighted:
    return "weighted(" + std::to_string(rows_.size()) + " rows, " +
           (tiebreak_ == Tiebreak::Lex ? "lex" : "grevlex") + " tiebreak)";
  case OrderKind::BlockElimination:
    return "block_elimination(" + std::to_string(block_) + ", " +
           tail_->describe() + ")";
  case OrderKind::Marked:
    return "marked";
  }
  return "?";
}

bool operator==(const MonomialOrder &a, const MonomialOrder &b) {
  if (a.kind_ != b.kind_)
    return false;
  switch (a.kind_) {
  case OrderKind::Lex:
  case OrderKind::GrevLex:
  case OrderKind::Marked:
    return true;
  case OrderKind::Weighted:
    return a.tiebreak_ == b.tiebreak_ && a.rows_ == b.rows_;
  case OrderKind::BlockElimination:
    return a.block_ == b.block_ && *a.tail_ == *b.tail_;
  }
  return false;
}

} // namespace toricgp
