#include "toricgp/groebner/generator_degrees.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "toricgp/errors.hpp"
#include "toricgp/lattice/linear_algebra.hpp"

namespace toricgp {

namespace {

constexpr std::size_t kMonomialCap = 5'000'000;

// All exponent vectors of total degree k in n variables, appended to out
// after adding `base`.
void append_multiples(const Monomial &base, std::size_t n, std::int64_t k,
                      std::unordered_set<Monomial, IntVectorHash> &out) {
  Monomial m = base;
  auto rec = [&](auto &&self, std::size_t from, std::int64_t left) -> void {
    if (left == 0) {
      out.insert(m);
      if (out.size() > kMonomialCap)
        throw BudgetExceeded("too many monomials in one degree");
      return;
    }
    for (std::size_t v = from; v < n; ++v) {
      m.add_at(v, 1);
      self(self, v, left - 1);
      m.add_at(v, -1);
    }
  };
  rec(rec, 0, k);
}

std::vector<Monomial> nonstandard_monomials(const std::vector<Monomial> &leads,
                                            std::size_t n, std::int64_t d) {
  std::unordered_set<Monomial, IntVectorHash> set;
  for (const Monomial &l : leads)
    if (l.degree() <= d)
      append_multiples(l, n, d - l.degree(), set);
  std::vector<Monomial> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::map<std::int64_t, std::size_t>
minimal_generator_degrees(const GroebnerBasis &g,
                          std::optional<std::int64_t> max_degree) {
  std::map<std::int64_t, std::size_t> out;
  for (const GbElement &e : g.elements)
    if (!e.poly.is_homogeneous())
      throw InvalidArgument("minimal generator degrees need a homogeneous ideal");
  if (g.elements.empty())
    return out;
  std::vector<Monomial> leads;
  for (const GbElement &e : g.elements) {
    if (e.lead.degree() == 0) {
      out[0] = 1;
      return out;
    }
    leads.push_back(e.lead);
  }
  const std::int64_t top = max_degree.value_or(g.max_degree());
  const std::size_t n = g.nvars;
  const bool binomial = g.all_binomial();

  std::vector<Monomial> prev; // nonstandard monomials of degree d - 1
  for (std::int64_t d = 1; d <= top; ++d) {
    std::vector<Monomial> cur = nonstandard_monomials(leads, n, d);
    std::unordered_map<Monomial, std::size_t, IntVectorHash> pos;
    pos.reserve(cur.size());
    for (std::size_t k = 0; k < cur.size(); ++k)
      pos.emplace(cur[k], k);

    std::size_t rank = 0;
    if (binomial) {
      GraphicRank gr(cur.size());
      for (const Monomial &u : prev) {
        const std::optional<Monomial> nf = monomial_normal_form(u, g);
        for (std::size_t v = 0; v < n; ++v) {
          Monomial a = u;
          a.add_at(v, 1);
          const std::size_t ia = pos.at(a);
          if (nf) {
            Monomial b = *nf;
            b.add_at(v, 1);
            auto ib = pos.find(b);
            if (ib != pos.end())
              gr.add_difference(ia, ib->second);
            else
              gr.add_unit(ia);
          } else {
            gr.add_unit(ia);
          }
        }
      }
      rank = gr.rank();
    } else {
      SparseRank sr;
      for (const Monomial &u : prev) {
        Polynomial f = Polynomial::monomial(u);
        f -= normal_form(f, g);
        for (std::size_t v = 0; v < n; ++v) {
          SparseRank::Vector vec;
          for (const auto &[m, c] : f.terms()) {
            Monomial a = m;
            a.add_at(v, 1);
            auto it = pos.find(a);
            if (it != pos.end())
              vec[it->second] += c;
          }
          sr.add(std::move(vec));
        }
      }
      rank = sr.rank();
    }
    if (cur.size() > rank)
      out[d] = cur.size() - rank;
    prev = std::move(cur);
  }
  return out;
}

} // namespace toricgp
