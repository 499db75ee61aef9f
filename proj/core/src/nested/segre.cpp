#include "toricgp/nested/segre.hpp"

#include <algorithm>
#include <string>

#include "toricgp/errors.hpp"

namespace toricgp {

SegreIndex::SegreIndex(SubsetFamily f, std::uint64_t cap) : f_(std::move(f)) {
  f_.validate();
  const std::uint64_t total = f_.product_size();
  if (total > cap)
    throw BudgetExceeded("Segre ring with " + std::to_string(total) +
                         " variables exceeds the cap of " + std::to_string(cap));
  const std::size_t m = f_.m();
  radix_.assign(m, 1);
  for (std::size_t k = m; k-- > 1;)
    radix_[k - 1] = radix_[k] * f_.sets[k].size();

  tuples_.reserve(total);
  std::vector<std::size_t> pos(m, 0);
  while (true) {
    std::vector<int> t(m);
    for (std::size_t k = 0; k < m; ++k)
      t[k] = f_.sets[k][pos[k]];
    tuples_.push_back(std::move(t));
    std::size_t k = m;
    while (k > 0 && ++pos[k - 1] == f_.sets[k - 1].size())
      pos[--k] = 0;
    if (k == 0)
      break;
  }

  std::vector<VariableIndex::Label> yl;
  for (std::size_t i = 0; i < m; ++i) {
    y_offset_.push_back(y_labels_.size());
    for (int j : f_.sets[i]) {
      y_labels_.emplace_back(i, j);
      yl.push_back({static_cast<int>(i + 1), j});
    }
  }
  x_vars_ = std::make_shared<VariableIndex>("x", tuples_);
  y_vars_ = std::make_shared<VariableIndex>("y", std::move(yl));
}

std::size_t SegreIndex::x_of(const std::vector<int> &tuple) const {
  if (tuple.size() != m())
    throw DimensionMismatch("tuple length differs from the number of sets");
  std::size_t x = 0;
  for (std::size_t k = 0; k < m(); ++k) {
    const Subset &s = f_.sets[k];
    auto it = std::lower_bound(s.begin(), s.end(), tuple[k]);
    if (it == s.end() || *it != tuple[k])
      throw InvalidArgument("tuple entry " + std::to_string(tuple[k]) +
                            " not in S_" + std::to_string(k + 1));
    x += radix_[k] * static_cast<std::size_t>(it - s.begin());
  }
  return x;
}

std::size_t SegreIndex::y_of(std::size_t copy, int j) const {
  const Subset &s = f_.sets.at(copy);
  auto it = std::lower_bound(s.begin(), s.end(), j);
  if (it == s.end() || *it != j)
    throw InvalidArgument("y-variable index " + std::to_string(j) +
                          " not in S_" + std::to_string(copy + 1));
  return y_offset_[copy] + static_cast<std::size_t>(it - s.begin());
}

std::pair<std::size_t, int> SegreIndex::y_label(std::size_t y) const {
  return y_labels_.at(y);
}

Monomial SegreIndex::phi_a(const Monomial &x) const {
  if (x.dim() != x_count())
    throw DimensionMismatch("x-monomial of the wrong length");
  Monomial y(y_count());
  for (std::size_t v = 0; v < x.dim(); ++v)
    if (x[v])
      for (std::size_t k = 0; k < m(); ++k)
        y.add_at(y_of(k, tuples_[v][k]), x[v]);
  return y;
}

IntVector SegreIndex::phi_b(const Monomial &y) const {
  if (y.dim() != y_count())
    throw DimensionMismatch("y-monomial of the wrong length");
  const std::size_t n = static_cast<std::size_t>(f_.n);
  IntVector out(n + m());
  for (std::size_t v = 0; v < y.dim(); ++v) {
    if (!y[v])
      continue;
    auto [copy, j] = y_labels_[v];
    out.add_at(static_cast<std::size_t>(j - 1), y[v]);
    out.add_at(n + copy, y[v]);
  }
  return out;
}

IntVector SegreIndex::psi(const Monomial &x) const {
  if (x.dim() != x_count())
    throw DimensionMismatch("x-monomial of the wrong length");
  IntVector out(static_cast<std::size_t>(f_.n));
  for (std::size_t v = 0; v < x.dim(); ++v)
    if (x[v])
      for (int j : tuples_[v])
        out.add_at(static_cast<std::size_t>(j - 1), x[v]);
  return out;
}

IntVector SegreIndex::multidegree(const Monomial &y) const {
  if (y.dim() != y_count())
    throw DimensionMismatch("y-monomial of the wrong length");
  IntVector out(m());
  for (std::size_t v = 0; v < y.dim(); ++v)
    if (y[v])
      out.add_at(y_labels_[v].first, y[v]);
  return out;
}

IntVector SegreIndex::point_of(std::size_t x) const {
  IntVector p(static_cast<std::size_t>(f_.n));
  for (int j : tuples_.at(x))
    p.add_at(static_cast<std::size_t>(j - 1), 1);
  return p;
}

namespace {

std::vector<std::size_t> y_ranking(const SegreIndex &idx) {
  std::vector<std::size_t> ranking;
  for (std::size_t i = 0; i < idx.m(); ++i) {
    const Subset &s = idx.family().sets[i];
    for (auto it = s.rbegin(); it != s.rend(); ++it)
      ranking.push_back(idx.y_of(i, *it));
  }
  return ranking;
}

} // namespace

MonomialOrder SegreIndex::y_order() const {
  return MonomialOrder::lex_ranking(y_ranking(*this));
}

MonomialOrder SegreIndex::sorting_order() const {
  return MonomialOrder::grevlex();
}

MonomialOrder SegreIndex::composite_order() const {
  // Lex on phi_A-images is lex on the rows "exponent of y_r", r in ranking
  // order, and that exponent is linear in x.
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r : y_ranking(*this)) {
    auto [copy, j] = y_labels_[r];
    std::vector<std::int64_t> row(x_count(), 0);
    for (std::size_t v = 0; v < x_count(); ++v)
      row[v] = tuples_[v][copy] == j;
    rows.push_back(std::move(row));
  }
  return MonomialOrder::weighted(std::move(rows), Tiebreak::GrevLex);
}

std::vector<int> tuple_meet(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = std::min(a[k], b.at(k));
  return out;
}

std::vector<int> tuple_join(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = std::max(a[k], b.at(k));
  return out;
}

GroebnerBasis segre_sorting_gb(const SegreIndex &idx) {
  const std::size_t n = idx.x_count();
  GroebnerBasis g;
  g.order = idx.sorting_order();
  g.reduced = true;
  g.nvars = n;
  g.variables = idx.x_variables();
  auto product = [&](std::size_t a, std::size_t b) {
    Monomial mono(n);
    mono.add_at(a, 1);
    mono.add_at(b, 1);
    return mono;
  };
  // For a < b, grevlex ranks x_a x_b by (b, a) reversed, so descending
  // (b, a) lists the leads in increasing order.
  for (std::size_t b = n; b-- > 0;) {
    for (std::size_t a = b; a-- > 0;) {
      const auto &ta = idx.tuple(a), &tb = idx.tuple(b);
      const auto meet = tuple_meet(ta, tb);
      if (meet == ta || meet == tb)
        continue; // comparable
      Monomial lead = product(a, b);
      Monomial tail = product(idx.x_of(meet), idx.x_of(tuple_join(ta, tb)));
      g.elements.push_back({Polynomial::binomial(lead, tail), std::move(lead)});
    }
  }
  return g;
}

Monomial lift_monomial(const Monomial &y, const SegreIndex &idx) {
  const IntVector deg = idx.multidegree(y);
  const std::size_t m = idx.m();
  const Exponent k = m ? deg[0] : 0;
  for (std::size_t i = 0; i < m; ++i)
    if (deg[i] != k)
      throw InvalidArgument("y-monomial of multidegree " + deg.to_string() +
                            " is not in the image of phi_A");
  // Indices of copy i in increasing order, with multiplicity.
  std::vector<std::vector<int>> sorted(m);
  for (std::size_t v = 0; v < y.dim(); ++v) {
    auto [copy, j] = idx.y_label(v);
    sorted[copy].insert(sorted[copy].end(), y[v], j);
  }
  Monomial x(idx.x_count());
  for (Exponent l = 0; l < k; ++l) {
    std::vector<int> t(m);
    for (std::size_t i = 0; i < m; ++i)
      t[i] = sorted[i][l];
    x.add_at(idx.x_of(t), 1);
  }
  return x;
}

Polynomial lift(const Polynomial &q, const SegreIndex &idx) {
  if (q.nvars() != idx.y_count())
    throw DimensionMismatch("polynomial is not in the y-ring");
  Polynomial out(idx.x_count());
  for (const auto &[mono, c] : q.terms())
    out.add_term(lift_monomial(mono, idx), c);
  return out;
}

} // namespace toricgp
