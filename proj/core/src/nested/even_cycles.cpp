#include "toricgp/nested/even_cycles.hpp"

#include <map>

#include "toricgp/errors.hpp"
#include "toricgp/groebner/toric.hpp"
#include "toricgp/polytopes/lattice_points.hpp"

namespace toricgp {

GroebnerBasis even_cycle_gb(const SegreIndex &idx, const MonomialOrder &order,
                            const BuchbergerOptions &options) {
  // Cayley points come in the same (copy, ground) order as the y-variables.
  const LatticePointSet cayley = cayley_sum_points(idx.family());
  GroebnerBasis g = toric_ideal_elimination(cayley.points, order, options);
  g.variables = idx.y_variables();
  return g;
}

std::optional<BipartiteCycle> cycle_of_binomial(const Polynomial &f,
                                                const SegreIndex &idx) {
  if (!f.is_binomial() || f.nvars() != idx.y_count())
    return std::nullopt;
  const Monomial u = f.terms().begin()->first;
  const Monomial v = std::next(f.terms().begin())->first;
  if (!u.is_squarefree() || !v.is_squarefree() || !u.coprime(v))
    return std::nullopt;
  // Each side must be a matching: one edge per copy and per ground vertex.
  std::map<std::size_t, int> u_copy, v_copy;
  std::map<int, std::size_t> u_ground, v_ground;
  for (std::size_t y = 0; y < u.dim(); ++y) {
    auto [copy, j] = idx.y_label(y);
    if (u[y]) {
      if (!u_copy.emplace(copy, j).second || !u_ground.emplace(j, copy).second)
        return std::nullopt;
    }
    if (v[y]) {
      if (!v_copy.emplace(copy, j).second || !v_ground.emplace(j, copy).second)
        return std::nullopt;
    }
  }
  if (u_copy.size() != v_copy.size() || u_copy.empty())
    return std::nullopt;
  for (const auto &[c, j] : u_copy)
    if (!v_copy.count(c) || !v_ground.count(j))
      return std::nullopt;
  // Follow copy -u-> ground -v-> copy until we return.
  BipartiteCycle cycle;
  std::size_t c = u_copy.begin()->first;
  do {
    const int j = u_copy.at(c);
    cycle.copies.push_back(c);
    cycle.grounds.push_back(j);
    c = v_ground.at(j);
  } while (c != cycle.copies.front() && cycle.copies.size() <= u_copy.size());
  if (cycle.copies.size() != u_copy.size())
    return std::nullopt;
  return cycle;
}

Polynomial cycle_binomial(const BipartiteCycle &c, const SegreIndex &idx) {
  const std::size_t r = c.copies.size();
  if (r < 2 || c.grounds.size() != r)
    throw InvalidArgument("a cycle needs at least two copies");
  Monomial u(idx.y_count()), v(idx.y_count());
  for (std::size_t k = 0; k < r; ++k) {
    u.add_at(idx.y_of(c.copies[k], c.grounds[k]), 1);
    v.add_at(idx.y_of(c.copies[(k + 1) % r], c.grounds[k]), 1);
  }
  return Polynomial::binomial(u, v);
}

} // namespace toricgp
