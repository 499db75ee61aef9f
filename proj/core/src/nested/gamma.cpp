#include "toricgp/nested/gamma.hpp"

#include "toricgp/groebner/groebner_basis.hpp"

#include <algorithm>
#include <string>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

// All y-monomials with the given copy grading, appended to out.
void monomials_of_multidegree(const SegreIndex &idx, const IntVector &deg,
                              std::uint64_t cap, std::vector<Monomial> &out) {
  Monomial cur(idx.y_count());
  auto fill = [&](auto &&self, std::size_t copy, std::size_t from,
                  Exponent left) -> void {
    if (copy == idx.m()) {
      if (out.size() >= cap)
        throw BudgetExceeded("Gamma enumeration exceeds " + std::to_string(cap) +
                             " candidates");
      out.push_back(cur);
      return;
    }
    const Subset &s = idx.family().sets[copy];
    if (left == 0) {
      self(self, copy + 1, 0, copy + 1 < idx.m() ? deg[copy + 1] : 0);
      return;
    }
    for (std::size_t p = from; p < s.size(); ++p) {
      const std::size_t y = idx.y_of(copy, s[p]);
      cur.add_at(y, 1);
      self(self, copy, p, left - 1);
      cur.add_at(y, -1);
    }
  };
  fill(fill, 0, 0, idx.m() ? deg[0] : 0);
}

} // namespace

std::vector<Monomial> gamma_generators(const IntVector &v, const SegreIndex &idx,
                                       int extra_levels, std::uint64_t cap) {
  if (v.dim() != idx.m())
    throw InvalidArgument("multidegree has " + std::to_string(v.dim()) +
                          " entries for " + std::to_string(idx.m()) + " copies");
  if (extra_levels < 0)
    throw InvalidArgument("extra_levels must be nonnegative");
  Exponent top = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    top = std::max(top, v[i]);
  std::vector<Monomial> candidates;
  for (Exponent k = top; k <= top + extra_levels; ++k) {
    IntVector deg(idx.m());
    for (std::size_t i = 0; i < idx.m(); ++i)
      deg.set(i, k - v[i]);
    monomials_of_multidegree(idx, deg, cap, candidates);
  }
  // The divisibility-minimal candidates, sorted.
  return MonomialIdeal::from_generators(idx.y_count(), std::move(candidates))
      .generators;
}

} // namespace toricgp
