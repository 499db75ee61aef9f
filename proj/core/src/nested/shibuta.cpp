#include "toricgp/nested/shibuta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toricgp/errors.hpp"
#include "toricgp/nested/even_cycles.hpp"
#include "toricgp/nested/exchange.hpp"
#include "toricgp/nested/gamma.hpp"
#include "toricgp/polytopes/lattice_points.hpp"

namespace toricgp {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index becomes the root.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a > b)
      std::swap(a, b);
    parent[b] = a;
  }
};

std::size_t single_variable(const Monomial &m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m[i])
      return i;
  throw Error("internal: constant monomial");
}

// Image of an x-monomial under x_a -> x_{pos[rep[a]]} in a ring of size k.
Monomial substitute(const Monomial &x, const std::vector<std::size_t> &rep,
                    const std::vector<std::size_t> &pos, std::size_t k) {
  Monomial out(k);
  for (std::size_t a = 0; a < x.dim(); ++a)
    if (x[a])
      out.add_at(pos[rep[a]], x[a]);
  return out;
}

MonomialOrder restrict_to(const MonomialOrder &order,
                          const std::vector<std::size_t> &columns) {
  return order.kind() == OrderKind::Marked ? order : order.restricted(columns);
}

} // namespace

ShibutaResult shibuta_gb(const SegreIndex &idx, const ShibutaOptions &options) {
  ShibutaResult out;
  ShibutaReport &rep = out.report;
  const std::size_t n = idx.x_count();
  const MonomialOrder composite = idx.composite_order();

  const GroebnerBasis segre = segre_sorting_gb(idx);
  const GroebnerBasis cycles =
      even_cycle_gb(idx, idx.y_order(), options.buchberger);
  rep.segre_size = segre.size();
  rep.cycle_size = cycles.size();
  rep.segre_squarefree = has_squarefree_initial_ideal(segre);
  rep.cycle_squarefree = has_squarefree_initial_ideal(cycles);

  for (const GbElement &e : segre.elements)
    out.raw.push_back(e.poly);

  // Lifts, deduplicated.
  std::vector<Polynomial> lifts;
  std::set<std::vector<std::pair<Monomial, Rational>>> distinct;
  for (const GbElement &f : cycles.elements) {
    CycleLifts cl{f.poly, idx.multidegree(f.lead), 0, 0};
    for (const auto &[mono, c] : f.poly.terms())
      if (idx.multidegree(mono) != cl.multidegree)
        throw Error("internal: cycle binomial is not multihomogeneous");
    const std::vector<Monomial> gamma = gamma_generators(cl.multidegree, idx);
    cl.gamma_size = gamma.size();
    for (const Monomial &g : gamma) {
      Polynomial l = lift(f.poly.times(g), idx);
      if (l.is_zero())
        continue;
      std::vector<std::pair<Monomial, Rational>> key(l.terms().begin(),
                                                     l.terms().end());
      if (!distinct.insert(std::move(key)).second)
        continue;
      ++cl.lifts;
      if (l.degree() > 1)
        ++rep.nonlinear_lifts;
      lifts.push_back(std::move(l));
    }
    rep.lift_count += cl.lifts;
    rep.cycles.push_back(std::move(cl));
  }
  out.raw.insert(out.raw.end(), lifts.begin(), lifts.end());

  // The linear lifts x_a - x_b identify variables; each class is represented
  // by its least index, which is also its composite-least variable.
  UnionFind uf(n);
  for (const Polynomial &l : lifts) {
    if (l.degree() != 1)
      continue;
    const Monomial a = l.terms().begin()->first;
    const Monomial b = std::next(l.terms().begin())->first;
    uf.unite(single_variable(a), single_variable(b));
  }
  out.rep.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    out.rep[a] = uf.find(a);
  {
    std::map<IntVector, std::size_t> fiber_rep;
    bool match = true;
    for (std::size_t a = 0; a < n && match; ++a) {
      auto [it, fresh] = fiber_rep.emplace(idx.point_of(a), a);
      match = out.rep[a] == it->second;
    }
    rep.classes_match_fibers = match;
  }

  std::vector<std::size_t> columns; // representatives, increasing
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    if (out.rep[a] == a) {
      pos[a] = columns.size();
      columns.push_back(a);
    }
  const std::size_t k = columns.size();

  // Everything that is not a linear identification, rewritten in the
  // representatives.
  std::set<std::pair<Monomial, Monomial>> inputs;
  auto add_input = [&](const Polynomial &p) {
    if (p.degree() <= 1 && p.is_binomial())
      return;
    if (!p.is_binomial())
      throw Error("internal: non-binomial generator of ker psi");
    Monomial a = substitute(p.terms().begin()->first, out.rep, pos, k);
    Monomial b = substitute(std::next(p.terms().begin())->first, out.rep, pos, k);
    if (a == b)
      return;
    if (b < a)
      std::swap(a, b);
    inputs.emplace(std::move(a), std::move(b));
  };
  for (const GbElement &e : segre.elements)
    add_input(e.poly);
  for (const Polynomial &l : lifts)
    add_input(l);

  const MonomialOrder reduced_order = restrict_to(composite, columns);
  const GroebnerBasis completion = buchberger_binomial(
      k, {inputs.begin(), inputs.end()}, reduced_order, options.buchberger);

  GroebnerBasis &g = out.basis;
  g.order = composite;
  g.nvars = n;
  g.variables = idx.x_variables();
  g.reduced = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (out.rep[a] == a)
      continue;
    const Monomial lead = Monomial::unit(n, a);
    g.elements.push_back(
        {Polynomial::binomial(lead, Monomial::unit(n, out.rep[a])), lead});
  }
  rep.linear_size = g.elements.size();
  auto widen = [&](const Monomial &m) {
    Monomial w(n);
    for (std::size_t c = 0; c < k; ++c)
      if (m[c])
        w.add_at(columns[c], m[c]);
    return w;
  };
  for (const GbElement &e : completion.elements) {
    if (e.lead.degree() <= 1)
      g.reduced = false; // only when the classes miss part of a fiber
    Polynomial p(n);
    for (const auto &[mono, c] : e.poly.terms())
      p.add_term(widen(mono), c);
    g.elements.push_back({std::move(p), widen(e.lead)});
  }
  rep.projected_size = completion.size();
  rep.squarefree = has_squarefree_initial_ideal(g);

  if (out.raw.size() <= options.raw_audit_limit) {
    GroebnerBasis raw;
    raw.order = composite;
    raw.nvars = n;
    raw.variables = idx.x_variables();
    for (const Polynomial &p : out.raw) {
      const Monomial lead = p.leading_monomial(composite);
      Polynomial monic = p;
      monic *= 1 / p.coefficient(lead);
      raw.elements.push_back({std::move(monic), lead});
    }
    rep.raw_confluent = audit_confluence(raw).confluent();
  }

  if (options.exchange_traces) {
    for (const Polynomial &l : lifts) {
      const ExchangeTrace t = exchange_reduce(l, idx);
      rep.exchange_trace_lengths.push_back(t.steps.size());
      rep.exchange_residuals_in_j = rep.exchange_residuals_in_j && t.residual_in_j;
    }
  }
  return out;
}

ProjectedBasis project_out_j(const GroebnerBasis &g, const SegreIndex &idx) {
  if (g.nvars != idx.x_count())
    throw DimensionMismatch("basis is not over the x-variables of the family");
  const std::size_t n = idx.x_count();
  const SubsetFamily &f = idx.family();

  // Representative of each x: the variable of its point's lex-min tuple.
  std::map<IntVector, std::size_t> rep_of_point;
  std::vector<std::size_t> rep(n);
  for (std::size_t a = 0; a < n; ++a) {
    const IntVector p = idx.point_of(a);
    auto it = rep_of_point.find(p);
    if (it == rep_of_point.end()) {
      const auto t = lex_min_tuple(f, p);
      if (!t)
        throw Error("no representative tuple for point " + p.to_string());
      it = rep_of_point.emplace(p, idx.x_of(*t)).first;
    }
    rep[a] = it->second;
  }
  std::vector<std::size_t> columns;
  for (std::size_t a = 0; a < n; ++a)
    if (rep[a] == a)
      columns.push_back(a);
  if (columns.size() != rep_of_point.size())
    throw Error("representative tuples are not their own representatives");
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t c = 0; c < columns.size(); ++c)
    pos[columns[c]] = c;
  const std::size_t k = columns.size();

  ProjectedBasis out;
  std::vector<VariableIndex::Label> labels;
  for (std::size_t c : columns) {
    out.representatives.push_back(idx.tuple(c));
    labels.push_back(idx.tuple(c));
  }
  GroebnerBasis &pb = out.basis;
  pb.order = restrict_to(g.order, columns);
  pb.nvars = k;
  pb.reduced = g.reduced;
  pb.variables = std::make_shared<VariableIndex>("x", std::move(labels));
  std::set<Polynomial, bool (*)(const Polynomial &, const Polynomial &)> kept(
      [](const Polynomial &a, const Polynomial &b) { return a.terms() < b.terms(); });
  std::vector<Monomial> leads;
  for (const GbElement &e : g.elements) {
    Polynomial p(k);
    for (const auto &[mono, c] : e.poly.terms())
      p.add_term(substitute(mono, rep, pos, k), c);
    if (p.is_zero() || !kept.insert(p).second)
      continue;
    Monomial lead = substitute(e.lead, rep, pos, k);
    leads.push_back(lead);
    pb.elements.push_back({std::move(p), std::move(lead)});
  }
  out.initial = MonomialIdeal::from_generators(k, std::move(leads));
  out.squarefree = is_squarefree(out.initial);
  return out;
}

} // namespace toricgp
