#include "toricgp/groebner/groebner_basis.hpp"

#include <algorithm>
#include <unordered_set>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

// Rewrite rule lead -> tail (tail absent: lead -> 0).
struct Rule {
  Monomial lead;
  std::optional<Monomial> tail;
  std::uint64_t mask;
};

std::optional<Rule> as_rule(const GbElement &e) {
  const auto &terms = e.poly.terms();
  const Rational lc = e.poly.coefficient(e.lead);
  if (lc == 0)
    return std::nullopt;
  if (terms.size() == 1)
    return Rule{e.lead, std::nullopt, e.lead.support_mask()};
  if (terms.size() != 2)
    return std::nullopt;
  for (const auto &[m, c] : terms) {
    if (m != e.lead) {
      if (c != -lc)
        return std::nullopt;
      return Rule{e.lead, m, e.lead.support_mask()};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Rule>> rules_of(const GroebnerBasis &g) {
  std::vector<Rule> rules;
  rules.reserve(g.elements.size());
  for (const GbElement &e : g.elements) {
    auto r = as_rule(e);
    if (!r)
      return std::nullopt;
    rules.push_back(std::move(*r));
  }
  return rules;
}

std::optional<Monomial> rewrite_monomial(Monomial m,
                                         const std::vector<Rule> &rules,
                                         std::uint64_t &budget) {
  while (true) {
    const std::uint64_t mm = m.support_mask();
    const Rule *hit = nullptr;
    for (const Rule &r : rules) {
      if ((r.mask & ~mm) == 0 && r.lead.divides(m)) {
        hit = &r;
        break;
      }
    }
    if (!hit)
      return m;
    if (!hit->tail)
      return std::nullopt;
    if (budget-- == 0)
      throw BudgetExceeded("normal form rewrite budget exhausted");
    m -= hit->lead;
    m += *hit->tail;
  }
}

const GbElement *find_divisor(const GroebnerBasis &g, const Monomial &m) {
  const std::uint64_t mm = m.support_mask();
  for (const GbElement &e : g.elements)
    if ((e.lead.support_mask() & ~mm) == 0 && e.lead.divides(m))
      return &e;
  return nullptr;
}

// a - b for term lists sorted decreasingly in `order`.
std::vector<Term> merge_subtract(const std::vector<Term> &a,
                                 const std::vector<Term> &b,
                                 const MonomialOrder &order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back({b[j].monomial, -b[j].coeff});
      ++j;
    } else {
      switch (order.compare(a[i].monomial, b[j].monomial)) {
      case Cmp::Greater:
        out.push_back(a[i++]);
        break;
      case Cmp::Less:
        out.push_back({b[j].monomial, -b[j].coeff});
        ++j;
        break;
      case Cmp::Equal: {
        Rational c = a[i].coeff - b[j].coeff;
        if (c != 0)
          out.push_back({a[i].monomial, std::move(c)});
        ++i;
        ++j;
        break;
      }
      }
    }
  }
  return out;
}

Polynomial ordered_division(const Polynomial &f, const GroebnerBasis &g,
                            std::uint64_t &budget) {
  std::vector<Term> p = f.sorted_terms(g.order);
  Polynomial r(f.nvars());
  std::size_t head = 0;
  while (head < p.size()) {
    const Term &t = p[head];
    const GbElement *e = find_divisor(g, t.monomial);
    if (!e) {
      r.add_term(t.monomial, t.coeff);
      ++head;
      continue;
    }
    if (budget-- == 0)
      throw BudgetExceeded("normal form rewrite budget exhausted");
    const Rational factor = t.coeff / e->poly.coefficient(e->lead);
    Polynomial q = e->poly.times(t.monomial - e->lead, factor);
    std::vector<Term> rest(p.begin() + static_cast<std::ptrdiff_t>(head),
                           p.end());
    p = merge_subtract(rest, q.sorted_terms(g.order), g.order);
    head = 0;
  }
  return r;
}

Polynomial marked_division(const Polynomial &f, const GroebnerBasis &g,
                           std::uint64_t &budget) {
  Polynomial p = f;
  while (true) {
    const GbElement *e = nullptr;
    Monomial target;
    // Largest term in plain exponent order that some lead divides.
    for (auto it = p.terms().rbegin(); it != p.terms().rend() && !e; ++it) {
      e = find_divisor(g, it->first);
      if (e)
        target = it->first;
    }
    if (!e)
      return p;
    if (budget-- == 0)
      throw BudgetExceeded("normal form rewrite budget exhausted");
    const Rational factor =
        p.coefficient(target) / e->poly.coefficient(e->lead);
    p -= e->poly.times(target - e->lead, factor);
  }
}

} // namespace

Polynomial GbElement::tail() const {
  Polynomial t = Polynomial::monomial(lead);
  t -= poly;
  return t;
}

bool GbElement::is_pure_binomial() const {
  auto r = as_rule(*this);
  return r && r->tail.has_value() && poly.coefficient(lead) == 1;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  for (const GbElement &e : elements)
    out.push_back(e.poly);
  return out;
}

std::int64_t GroebnerBasis::max_degree() const {
  std::int64_t d = 0;
  for (const GbElement &e : elements)
    d = std::max(d, e.poly.degree());
  return d;
}

bool GroebnerBasis::all_binomial() const {
  return std::all_of(elements.begin(), elements.end(),
                     [](const GbElement &e) { return as_rule(e).has_value(); });
}

namespace {

// Nonzero entries of a monomial, by index.
using Sparse = std::vector<std::pair<std::uint32_t, Exponent>>;

struct SparseHash {
  std::size_t operator()(const Sparse &s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto [i, e] : s) {
      h ^= (static_cast<std::uint64_t>(i) << 32 | static_cast<std::uint32_t>(e)) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

Sparse sparse(const Monomial &m) {
  Sparse s;
  const auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i])
      s.emplace_back(static_cast<std::uint32_t>(i), e[i]);
  return s;
}

// Is some element of `kept` (also listed in `list`) a divisor of m? Looks up
// every divisor of m when there are fewer of them than list entries, else
// scans the list.
bool redundant_in(const Monomial &m, const Sparse &ms,
                  const std::unordered_set<Sparse, SparseHash> &kept,
                  const std::vector<Monomial> &list) {
  constexpr std::uint64_t kMaxDivisors = 4096;
  const std::uint64_t cap =
      std::min<std::uint64_t>(kMaxDivisors, list.size());
  std::uint64_t count = 1;
  for (auto [i, e] : ms) {
    count *= static_cast<std::uint64_t>(e) + 1;
    if (count > cap)
      return std::any_of(list.begin(), list.end(),
                         [&](const Monomial &k) { return k.divides(m); });
  }
  // Odometer over the exponents, counting down from m.
  std::vector<Exponent> d;
  for (auto [i, e] : ms)
    d.push_back(e);
  Sparse key;
  while (true) {
    key.clear();
    for (std::size_t k = 0; k < ms.size(); ++k)
      if (d[k])
        key.emplace_back(ms[k].first, d[k]);
    if (kept.count(key))
      return true;
    std::size_t k = 0;
    while (k < d.size() && d[k] == 0) {
      d[k] = ms[k].second;
      ++k;
    }
    if (k == d.size())
      return false;
    --d[k];
  }
}

} // namespace

MonomialIdeal MonomialIdeal::from_generators(std::size_t nvars,
                                             std::vector<Monomial> gens) {
  for (const Monomial &m : gens)
    if (m.dim() != nvars)
      throw DimensionMismatch("monomial ideal generator of wrong dimension");
  std::vector<std::pair<std::int64_t, std::size_t>> by_degree;
  by_degree.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    by_degree.emplace_back(gens[i].degree(), i);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });
  MonomialIdeal out{nvars, {}};
  std::unordered_set<Sparse, SparseHash> kept;
  for (const auto &[deg, i] : by_degree) {
    const Monomial &m = gens[i];
    Sparse ms = sparse(m);
    if (!redundant_in(m, ms, kept, out.generators)) {
      out.generators.push_back(m);
      kept.insert(std::move(ms));
    }
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

bool MonomialIdeal::contains(const Monomial &m) const {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Monomial &g) { return g.divides(m); });
}

Polynomial normal_form(const Polynomial &f, const GroebnerBasis &g,
                       std::uint64_t budget) {
  if (f.nvars() != g.nvars)
    throw DimensionMismatch("polynomial and basis over different rings");
  if (auto rules = rules_of(g)) {
    // Binomial rules send monomials to monomials, so reduction is linear.
    Polynomial r(f.nvars());
    for (const auto &[m, c] : f.terms())
      if (auto nf = rewrite_monomial(m, *rules, budget))
        r.add_term(*nf, c);
    return r;
  }
  return g.order.is_total() ? ordered_division(f, g, budget)
                            : marked_division(f, g, budget);
}

std::optional<Monomial> monomial_normal_form(const Monomial &m,
                                             const GroebnerBasis &g) {
  if (m.dim() != g.nvars)
    throw DimensionMismatch("monomial and basis over different rings");
  auto rules = rules_of(g);
  if (!rules)
    throw InvalidArgument("monomial_normal_form needs a binomial basis");
  std::uint64_t budget = kDefaultRewriteBudget;
  return rewrite_monomial(m, *rules, budget);
}

Polynomial s_polynomial(const GbElement &a, const GbElement &b) {
  const Monomial l = lcm(a.lead, b.lead);
  Polynomial s =
      a.poly.times(l - a.lead, Rational(1) / a.poly.coefficient(a.lead));
  s -= b.poly.times(l - b.lead, Rational(1) / b.poly.coefficient(b.lead));
  return s;
}

ConfluenceAudit audit_confluence(const GroebnerBasis &g,
                                 std::size_t max_failures) {
  ConfluenceAudit audit;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < g.elements.size(); ++j) {
      const GbElement &a = g.elements[i], &b = g.elements[j];
      if (a.lead.coprime(b.lead)) {
        ++audit.pairs_skipped_coprime;
        continue;
      }
      ++audit.pairs_checked;
      Polynomial r = normal_form(s_polynomial(a, b), g);
      if (!r.is_zero()) {
        if (audit.failures++ == 0) {
          audit.witness_pair = {i, j};
          audit.witness_remainder = std::move(r);
        }
        if (audit.failures >= max_failures)
          return audit;
      }
    }
  }
  return audit;
}

MonomialIdeal initial_ideal(const GroebnerBasis &g) {
  std::vector<Monomial> leads;
  leads.reserve(g.elements.size());
  for (const GbElement &e : g.elements)
    leads.push_back(e.lead);
  return MonomialIdeal::from_generators(g.nvars, std::move(leads));
}

bool is_squarefree(const MonomialIdeal &ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [](const Monomial &m) { return m.is_squarefree(); });
}

bool has_squarefree_initial_ideal(const GroebnerBasis &g) {
  if (std::all_of(g.elements.begin(), g.elements.end(),
                  [](const GbElement &e) { return e.lead.is_squarefree(); }))
    return true;
  return is_squarefree(initial_ideal(g));
}

bool ideal_equal(const GroebnerBasis &a, const GroebnerBasis &b) {
  if (a.nvars != b.nvars)
    throw DimensionMismatch("bases over different rings");
  for (const GbElement &e : a.elements)
    if (!normal_form(e.poly, b).is_zero())
      return false;
  for (const GbElement &e : b.elements)
    if (!normal_form(e.poly, a).is_zero())
      return false;
  return true;
}

} // namespace toricgp
