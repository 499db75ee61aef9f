#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toricgp/lattice/int_vector.hpp"
#include "toricgp/lattice/monomial_order.hpp"
#include "toricgp/lattice/rational.hpp"

namespace toricgp {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term &, const Term &) = default;
};

// Sparse polynomial with exact rational coefficients over a fixed number of
// variables. Zero coefficients are never stored. Terms are kept in the plain
// lexicographic order of their exponent vectors, which is independent of any
// monomial order; sorted_terms() yields them in a requested order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial monomial(Monomial m, Rational c = 1);
  // x^u - x^v.
  static Polynomial binomial(const Monomial &u, const Monomial &v);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Rational> &terms() const { return terms_; }

  Rational coefficient(const Monomial &m) const;
  void add_term(const Monomial &m, const Rational &c);

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Rational &c);
  Polynomial operator-() const;
  // c * x^m * this
  Polynomial times(const Monomial &m, const Rational &c = 1) const;

  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

  // Exactly two terms with coefficients +1 and -1.
  bool is_binomial() const;
  bool is_homogeneous() const;
  std::int64_t degree() const;

  std::vector<Term> sorted_terms(const MonomialOrder &order) const;
  Monomial leading_monomial(const MonomialOrder &order) const;
  Rational leading_coefficient(const MonomialOrder &order) const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  void check_same_ring(const Polynomial &other) const;

  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

} // namespace toricgp
