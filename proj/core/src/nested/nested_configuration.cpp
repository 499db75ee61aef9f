#include "toricgp/nested/nested_configuration.hpp"

#include <string>

#include "toricgp/errors.hpp"

namespace toricgp {

std::vector<IntVector> NestedConfiguration::points() const {
  std::vector<IntVector> out;
  out.reserve(elements.size());
  for (const NestedElement &e : elements)
    out.push_back(e.point);
  return out;
}

namespace {

// Compositions of `total` into `parts` nonnegative parts, largest first part
// first.
void compositions(int total, std::size_t parts, std::vector<Exponent> &cur,
                  std::vector<std::vector<Exponent>> &out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

} // namespace

NestedConfiguration nested_configuration(const std::vector<IntVector> &a,
                                         const std::vector<std::vector<IntVector>> &b,
                                         std::uint64_t cap) {
  const std::size_t s = b.size();
  std::size_t dim = 0;
  bool have_dim = false;
  for (const auto &bi : b) {
    if (bi.empty())
      throw InvalidArgument("every B_i must be nonempty");
    for (const IntVector &p : bi) {
      if (have_dim && p.dim() != dim)
        throw DimensionMismatch("points of the B_i differ in dimension");
      dim = p.dim();
      have_dim = true;
    }
  }
  for (const IntVector &row : a)
    if (row.dim() != s)
      throw DimensionMismatch("rows of A must have one entry per B_i");

  NestedConfiguration out{a, b, {}};
  for (std::size_t r = 0; r < a.size(); ++r) {
    // Choices per copy, then their product.
    std::vector<std::vector<std::vector<Exponent>>> choices(s);
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<Exponent> cur;
      compositions(a[r][i], b[i].size(), cur, choices[i]);
    }
    std::vector<std::size_t> pos(s, 0);
    while (true) {
      if (out.elements.size() >= cap)
        throw BudgetExceeded("nested configuration exceeds " +
                             std::to_string(cap) + " elements");
      NestedElement e{IntVector(dim), r, {}};
      for (std::size_t i = 0; i < s; ++i) {
        const auto &row = choices[i][pos[i]];
        for (std::size_t j = 0; j < row.size(); ++j)
          if (row[j])
            e.point += b[i][j].scaled(row[j]);
        e.exponents.push_back(row);
      }
      out.elements.push_back(std::move(e));
      std::size_t k = s;
      while (k > 0 && ++pos[k - 1] == choices[k - 1].size())
        pos[--k] = 0;
      if (k == 0)
        break;
    }
  }
  return out;
}

} // namespace toricgp
