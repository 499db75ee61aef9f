#include "toricgp/groebner/toric.hpp"

#include <memory>

#include "toricgp/errors.hpp"
#include "toricgp/lattice/linear_algebra.hpp"

namespace toricgp {

std::optional<std::vector<Rational>>
configuration_hyperplane(const std::vector<IntVector> &points) {
  if (points.empty())
    return std::vector<Rational>{};
  const std::size_t d = points.front().dim();
  RationalMatrix a;
  for (const IntVector &p : points) {
    if (p.dim() != d)
      throw DimensionMismatch("points of differing dimension");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < d; ++k)
      row.emplace_back(p[k]);
    a.push_back(std::move(row));
  }
  return solve_linear(a, std::vector<Rational>(points.size(), Rational(1)));
}

bool is_configuration(const std::vector<IntVector> &points) {
  return configuration_hyperplane(points).has_value();
}

IntVector monomial_image(const Monomial &u,
                         const std::vector<IntVector> &points) {
  if (u.dim() != points.size())
    throw DimensionMismatch("monomial length differs from point count");
  IntVector out(points.empty() ? 0 : points.front().dim());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (u[i] != 0)
      out += points[i].scaled(u[i]);
  return out;
}

GroebnerBasis toric_ideal_elimination(const std::vector<IntVector> &points,
                                      const MonomialOrder &x_order,
                                      const BuchbergerOptions &options,
                                      BuchbergerStats *stats) {
  if (!is_configuration(points))
    throw InvalidArgument("points do not form a configuration");
  const std::size_t n = points.size();
  const std::size_t d = n == 0 ? 0 : points.front().dim();
  const std::size_t total = d + n;

  std::vector<std::pair<Monomial, Monomial>> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial x(total), t(total);
    x.set(d + i, 1);
    for (std::size_t k = 0; k < d; ++k)
      t.set(k, points[i][k]);
    gens.emplace_back(std::move(x), std::move(t));
  }
  const MonomialOrder order = MonomialOrder::block_elimination(d, x_order);
  // With a common coordinate sum s > 0, deg t_j = 1 and deg x_i = s make
  // every generator homogeneous, and pairs are then taken by that degree.
  BuchbergerOptions opts = options;
  if (opts.weights.empty() && n > 0) {
    const std::int64_t s = points.front().degree();
    bool common = s > 0;
    for (const IntVector &p : points)
      common = common && p.degree() == s;
    if (common) {
      opts.weights.assign(d, 1);
      opts.weights.resize(total, s);
      opts.max_degree = options.max_degree * s;
    }
  }
  GroebnerBasis full = buchberger_binomial(total, gens, order, opts, stats);

  GroebnerBasis out;
  out.order = x_order;
  out.reduced = true;
  out.nvars = n;
  out.variables = std::make_shared<VariableIndex>(VariableIndex::numbered("x", n));
  auto strip = [&](const Monomial &m) {
    std::vector<Exponent> e(m.entries().begin() + static_cast<std::ptrdiff_t>(d),
                            m.entries().end());
    return Monomial(std::move(e));
  };
  for (const GbElement &e : full.elements) {
    bool t_free = true;
    for (std::size_t k = 0; k < d && t_free; ++k)
      t_free = e.lead[k] == 0;
    if (!t_free)
      continue;
    Polynomial p(n);
    for (const auto &[m, c] : e.poly.terms())
      p.add_term(strip(m), c);
    out.elements.push_back({std::move(p), strip(e.lead)});
  }
  return out;
}

} // namespace toricgp
