#include <gtest/gtest.h>

#include <random>

#include "support/builders.hpp"
#include "toricgp/errors.hpp"
#include "toricgp/lattice/monomial_order.hpp"

using namespace toricgp;
using support::parse;

TEST(IntVector, ArithmeticAndChecks) {
  IntVector a{1, 0, 2}, b{0, 3, 1};
  EXPECT_EQ(a + b, (IntVector{1, 3, 3}));
  EXPECT_EQ(a.degree(), 3);
  EXPECT_TRUE((IntVector{1, 0, 1}).is_squarefree());
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_TRUE((IntVector{1, 0, 1}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(lcm(a, b), (IntVector{1, 3, 2}));
  EXPECT_EQ(gcd(a, b), (IntVector{0, 0, 1}));
  EXPECT_THROW(a - b, InvalidArgument);
  EXPECT_THROW((IntVector{-1}), InvalidArgument);
  EXPECT_THROW(IntVector{std::numeric_limits<Exponent>::max()} + IntVector{1},
               OverflowError);
}

TEST(SortTuple, Examples) {
  EXPECT_EQ(sort_tuple({2, 1, 2}), (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(sort_tuple({1, 2, 3}), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(sort_tuple({3, 1}), (std::vector<int>{1, 3}));
}

TEST(MonomialOrder, WorkedExamples) {
  const Monomial a{1, 0, 1}, b{0, 2, 0};
  EXPECT_EQ(MonomialOrder::grevlex().compare(a, b), Cmp::Less);
  EXPECT_EQ(MonomialOrder::lex().compare(a, b), Cmp::Greater);
  EXPECT_EQ(MonomialOrder::grevlex().compare(a, a), Cmp::Equal);
}

TEST(MonomialOrder, Errors) {
  EXPECT_THROW(MonomialOrder::lex().compare(Monomial{1}, Monomial{1, 0}),
               DimensionMismatch);
  EXPECT_THROW(MonomialOrder::marked().compare(Monomial{1}, Monomial{0}),
               InvalidArgument);
  EXPECT_THROW(MonomialOrder::weighted({{1, -1}}), InvalidArgument);
}

TEST(MonomialOrder, LexRankingMatchesPermutedLex) {
  const auto ord = MonomialOrder::lex_ranking({2, 0, 1});
  // x3 > x1 > x2.
  EXPECT_EQ(ord.compare(Monomial{0, 0, 1}, Monomial{5, 5, 0}), Cmp::Greater);
  EXPECT_EQ(ord.compare(Monomial{1, 0, 0}, Monomial{0, 9, 0}), Cmp::Greater);
}

TEST(MonomialOrder, RestrictedWeightedKeepsColumns) {
  const auto ord = MonomialOrder::weighted({{1, 0, 2}, {0, 1, 0}});
  const auto r = ord.restricted({0, 2});
  EXPECT_EQ(r.compare(Monomial{0, 1}, Monomial{1, 0}), Cmp::Greater);
}

// Total, multiplicative, 1 minimal: on random triples for every kind.
TEST(MonomialOrder, TermOrderAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  const std::size_t n = 5;
  std::vector<MonomialOrder> orders = {
      MonomialOrder::lex(), MonomialOrder::grevlex(),
      MonomialOrder::weighted({{3, 1, 0, 2, 1}}, Tiebreak::Lex),
      MonomialOrder::weighted({{0, 1, 1, 0, 0}, {1, 0, 0, 0, 1}}),
      MonomialOrder::lex_ranking({4, 2, 0, 1, 3}),
      MonomialOrder::block_elimination(2, MonomialOrder::lex()),
  };
  const Monomial one(n);
  for (const MonomialOrder &ord : orders) {
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a = support::random_monomial(rng, n, 3);
      Monomial b = support::random_monomial(rng, n, 3);
      Monomial c = support::random_monomial(rng, n, 3);
      const Cmp ab = ord.compare(a, b), ba = ord.compare(b, a);
      EXPECT_EQ(ab == Cmp::Equal, a == b) << ord.describe();
      if (ab == Cmp::Less)
        EXPECT_EQ(ba, Cmp::Greater);
      if (ab == Cmp::Less)
        EXPECT_EQ(ord.compare(a + c, b + c), Cmp::Less) << ord.describe();
      EXPECT_NE(ord.compare(one, a), Cmp::Greater) << ord.describe();
    }
  }
}

TEST(Polynomial, ExactArithmetic) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f(4), g(4);
    for (int k = 0; k < 5; ++k) {
      f.add_term(support::random_monomial(rng, 4, 2),
                 Rational(coeff(rng), 1 + std::abs(coeff(rng))));
      g.add_term(support::random_monomial(rng, 4, 2), Rational(coeff(rng)));
    }
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Polynomial, BinomialAndHomogeneity) {
  const Polynomial p = parse("x[1]*x[3] - x[2]^2", 3);
  EXPECT_TRUE(p.is_binomial());
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.leading_monomial(MonomialOrder::grevlex()), (Monomial{0, 2, 0}));
  EXPECT_FALSE(parse("x[1] - 2*x[2]", 2).is_binomial());
  EXPECT_FALSE(parse("x[1]^2 - x[2]", 2).is_homogeneous());
  EXPECT_THROW(Polynomial(2) += Polynomial(3), DimensionMismatch);
}

TEST(TextFormat, CanonicalRendering) {
  const VariableIndex vars("x", {{1, 2}, {2, 1}, {1, 1}, {2, 2}});
  const Polynomial p =
      parse_polynomial("-x[1,1]*x[2,2] + x[1,2]*x[2,1]", vars);
  EXPECT_EQ(format_polynomial(p, vars, MonomialOrder::lex()),
            "x[1,2]*x[2,1] - x[1,1]*x[2,2]");
  EXPECT_EQ(format_polynomial(parse("3/2*x[1] - x[2]^3", 2),
                              VariableIndex::numbered("x", 2),
                              MonomialOrder::grevlex()),
            "-x[2]^3 + 3/2*x[1]");
  EXPECT_EQ(format_monomial(Monomial{0, 0}, VariableIndex::numbered("x", 2)),
            "1");
}

TEST(TextFormat, RoundTripIsBitExact) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const VariableIndex vars = VariableIndex::numbered("x", 4);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f(4);
    for (int k = 0; k < 4; ++k)
      f.add_term(support::random_monomial(rng, 4, 3),
                 Rational(coeff(rng), 1 + std::abs(coeff(rng))));
    for (const auto &ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
      const std::string s = format_polynomial(f, vars, ord);
      const Polynomial back = parse_polynomial(s, vars);
      EXPECT_EQ(back, f) << s;
      EXPECT_EQ(format_polynomial(back, vars, ord), s);
    }
  }
}

TEST(TextFormat, ParseErrors) {
  const VariableIndex vars = VariableIndex::numbered("x", 2);
  EXPECT_THROW(parse_polynomial("x[3]", vars), InvalidArgument);
  EXPECT_THROW(parse_polynomial("x[1] +", vars), InvalidArgument);
  EXPECT_THROW(parse_polynomial("y[1]", vars), InvalidArgument);
  EXPECT_THROW(parse_polynomial("x[1]^", vars), InvalidArgument);
}

TEST(VariableIndex, Labels) {
  const VariableIndex v("y", {{1, 2}, {2, 3}});
  EXPECT_EQ(v.name(1), "y[2,3]");
  EXPECT_EQ(v.at({1, 2}), 0u);
  EXPECT_FALSE(v.find({3, 3}).has_value());
  EXPECT_THROW(VariableIndex("y", {{1}, {1}}), InvalidArgument);
}
