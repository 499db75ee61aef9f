#include "toricgp/lattice/text_format.hpp"

#include <cctype>
#include <cstdlib>

#include "toricgp/errors.hpp"

namespace toricgp {

std::string format_monomial(const Monomial &m, const VariableIndex &vars) {
  if (m.dim() != vars.size())
    throw DimensionMismatch("monomial does not match the variable index");
  std::string s;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += vars.name(i);
    if (m[i] > 1)
      s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string format_polynomial(const Polynomial &p, const VariableIndex &vars,
                              const MonomialOrder &order) {
  if (p.is_zero())
    return "0";
  std::vector<Term> terms;
  if (order.is_total()) {
    terms = p.sorted_terms(order);
  } else {
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
      terms.push_back({it->first, it->second});
  }
  std::string s;
  bool first = true;
  for (const Term &t : terms) {
    const bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_zero()) {
      s += rational_to_string(mag);
    } else {
      if (mag != 1)
        s += rational_to_string(mag) + "*";
      s += format_monomial(t.monomial, vars);
    }
  }
  return s;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const VariableIndex &vars)
      : text_(text), vars_(vars) {}

  Polynomial polynomial() {
    Polynomial p(vars_.size());
    skip_ws();
    if (eat('0') && at_end())
      return p;
    pos_ = 0;
    skip_ws();
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, c] = term();
      p.add_term(m, sign * c);
      first = false;
      skip_ws();
    }
    if (first)
      fail("empty polynomial");
    return p;
  }

  Monomial monomial_only() {
    skip_ws();
    Monomial m = monomial();
    skip_ws();
    if (!at_end())
      fail("trailing characters");
    return m;
  }

private:
  std::pair<Monomial, Rational> term() {
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      skip_ws();
      if (!eat('*'))
        return {Monomial(vars_.size()), c};
      skip_ws();
    }
    return {monomial(), c};
  }

  Rational number() {
    std::string digits = integer_digits();
    if (eat('/')) {
      std::string den = integer_digits();
      Rational q(digits + "/" + den);
      if (q.get_den() == 0)
        fail("zero denominator");
      q.canonicalize();
      return q;
    }
    return Rational(digits);
  }

  std::string integer_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Monomial monomial() {
    Monomial m(vars_.size());
    if (peek() == '1') {
      ++pos_;
      return m;
    }
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      while (!at_end() && peek() != '[')
        ++pos_;
      std::string_view prefix = text_.substr(start, pos_ - start);
      if (prefix != vars_.prefix())
        fail("unknown variable prefix '" + std::string(prefix) + "'");
      if (!eat('['))
        fail("expected '['");
      VariableIndex::Label label;
      if (!eat(']')) {
        while (true) {
          label.push_back(std::stoi(integer_digits()));
          if (eat(']'))
            break;
          if (!eat(','))
            fail("expected ',' or ']'");
        }
      }
      Exponent e = 1;
      if (eat('^'))
        e = checked_exponent(std::stoll(integer_digits()));
      auto idx = vars_.find(label);
      if (!idx)
        fail("unknown variable label");
      m.add_at(*idx, e);
      skip_ws();
      if (!eat('*'))
        break;
    }
    return m;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw InvalidArgument("parse error at offset " + std::to_string(pos_) +
                          ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool eat(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  std::string_view text_;
  const VariableIndex &vars_;
  std::size_t pos_ = 0;
};

} // namespace

Monomial parse_monomial(std::string_view text, const VariableIndex &vars) {
  return Parser(text, vars).monomial_only();
}

Polynomial parse_polynomial(std::string_view text, const VariableIndex &vars) {
  return Parser(text, vars).polynomial();
}

} // namespace toricgp
