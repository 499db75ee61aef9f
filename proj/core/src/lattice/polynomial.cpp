#include "toricgp/lattice/polynomial.hpp"

#include <algorithm>

#include "toricgp/errors.hpp"

namespace toricgp {

std::string rational_to_string(const Rational &q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p(m.dim());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::binomial(const Monomial &u, const Monomial &v) {
  if (u.dim() != v.dim())
    throw DimensionMismatch("binomial terms over different variable counts");
  Polynomial p(u.dim());
  p.add_term(u, 1);
  p.add_term(v, -1);
  return p;
}

Rational Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
  if (m.dim() != nvars_)
    throw DimensionMismatch("term has " + std::to_string(m.dim()) +
                            " variables, polynomial has " +
                            std::to_string(nvars_));
  if (c == 0)
    return;
  Rational cc(c);
  cc.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, cc);
  if (!inserted) {
    it->second += cc;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial &other) const {
  if (nvars_ != other.nvars_)
    throw DimensionMismatch("polynomials over different variable counts");
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  check_same_ring(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  check_same_ring(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, coeff] : terms_)
    coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  p *= Rational(-1);
  return p;
}

Polynomial Polynomial::times(const Monomial &m, const Rational &c) const {
  Polynomial out(nvars_);
  if (c == 0)
    return out;
  for (const auto &[mono, coeff] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), mono + m, coeff * c);
  return out;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_same_ring(b);
  Polynomial out(a.nvars_);
  for (const auto &[m, c] : b.terms_)
    out += a.times(m, c);
  return out;
}

bool Polynomial::is_binomial() const {
  if (terms_.size() != 2)
    return false;
  const Rational &c1 = terms_.begin()->second;
  const Rational &c2 = std::next(terms_.begin())->second;
  return (c1 == 1 && c2 == -1) || (c1 == -1 && c2 == 1);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty())
    return true;
  const std::int64_t d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto &t) { return t.first.degree() == d; });
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.degree());
  return d;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder &order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &[m, c] : terms_)
    out.push_back({m, c});
  std::sort(out.begin(), out.end(), [&](const Term &a, const Term &b) {
    return order.compare(a.monomial, b.monomial) == Cmp::Greater;
  });
  return out;
}

Monomial Polynomial::leading_monomial(const MonomialOrder &order) const {
  if (terms_.empty())
    throw InvalidArgument("zero polynomial has no leading monomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) == Cmp::Greater)
      best = it;
  return best->first;
}

Rational Polynomial::leading_coefficient(const MonomialOrder &order) const {
  return coefficient(leading_monomial(order));
}

} // namespace toricgp
