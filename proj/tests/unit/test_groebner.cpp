#include <gtest/gtest.h>

#include <random>

#include "oracles/kernel_search.hpp"
#include "support/builders.hpp"
#include "toricgp/errors.hpp"
#include "toricgp/groebner/buchberger.hpp"
#include "toricgp/groebner/generator_degrees.hpp"
#include "toricgp/groebner/toric.hpp"

using namespace toricgp;
using support::parse;
using support::parse_all;
using support::render;

namespace {

// Pitman-Stanley n = 3, points in first-appearance order:
// (2,0,0) (1,1,0) (1,0,1) (0,2,0) (0,1,1).
std::vector<Polynomial> pitman_stanley_gens() {
  return parse_all({"x[1]*x[4] - x[2]^2", "x[1]*x[5] - x[2]*x[3]",
                    "x[2]*x[5] - x[3]*x[4]"},
                   5);
}

std::vector<IntVector> pitman_stanley_points() {
  return {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}};
}

std::vector<IntVector> random_configuration(std::mt19937_64 &rng) {
  // Points with coordinate sum 3 in Z^3 lie on a common hyperplane.
  std::vector<IntVector> all;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      all.push_back({a, b, 3 - a - b});
  std::uniform_int_distribution<std::size_t> count(2, 8);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  const std::size_t k = count(rng);
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < k; ++i)
    pts.push_back(all[pick(rng)]);
  return pts;
}

} // namespace

TEST(Buchberger, PitmanStanleyGrevlexIsAlreadyReduced) {
  const GroebnerBasis g = buchberger(pitman_stanley_gens(), MonomialOrder::grevlex());
  EXPECT_TRUE(g.reduced);
  EXPECT_EQ(render(g), (std::vector<std::string>{"x[3]*x[4] - x[2]*x[5]",
                                                 "x[2]*x[3] - x[1]*x[5]",
                                                 "x[2]^2 - x[1]*x[4]"}));
  EXPECT_TRUE(audit_confluence(g, 10).confluent());
}

TEST(Buchberger, SingleBinomialAndEmpty) {
  const auto g = buchberger({parse("x[1]*x[4] - x[2]*x[3]", 4)},
                            MonomialOrder::grevlex());
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(render(g)[0], "x[2]*x[3] - x[1]*x[4]");
  EXPECT_TRUE(buchberger({}, MonomialOrder::lex()).empty());
}

TEST(Buchberger, RejectsMarkedOrder) {
  EXPECT_THROW(buchberger(pitman_stanley_gens(), MonomialOrder::marked()),
               InvalidArgument);
}

TEST(Buchberger, BudgetsAreErrors) {
  BuchbergerOptions tight;
  tight.max_basis = 2;
  EXPECT_THROW(buchberger(pitman_stanley_gens(), MonomialOrder::grevlex(), tight),
               BudgetExceeded);
  BuchbergerOptions shallow;
  shallow.max_degree = 1;
  EXPECT_THROW(buchberger(pitman_stanley_gens(), MonomialOrder::grevlex(), shallow),
               BudgetExceeded);
}

TEST(Buchberger, GeneralRationalIdeal) {
  // x^2 + y^2 - 1, xy - 2: lex basis has a univariate quartic in y.
  const auto gens = parse_all({"x[1]^2 + x[2]^2 - 1", "x[1]*x[2] - 2"}, 2);
  const auto g = buchberger(gens, MonomialOrder::lex());
  EXPECT_TRUE(audit_confluence(g, 10).confluent());
  for (const Polynomial &p : gens)
    EXPECT_TRUE(normal_form(p, g).is_zero());
  bool univariate = false;
  for (const GbElement &e : g.elements)
    univariate |= e.lead[0] == 0;
  EXPECT_TRUE(univariate);
}

TEST(Buchberger, CriteriaAndPathsGiveIdenticalBases) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const auto pts = random_configuration(rng);
    const auto base = toric_ideal_elimination(pts);
    const auto gens = base.polynomials();
    for (const auto &ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      BuchbergerOptions plain;
      plain.chain_criterion = false;
      BuchbergerOptions general;
      general.force_general = true;
      const auto a = buchberger(gens, ord);
      const auto b = buchberger(gens, ord, plain);
      const auto c = buchberger(gens, ord, general);
      EXPECT_EQ(a.elements, b.elements);
      EXPECT_EQ(a.elements, c.elements);
    }
  }
}

TEST(Buchberger, RandomNonBinomialIdealsAgreeAcrossCriteria) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      Polynomial f(3);
      for (int t = 0; t < 3; ++t)
        f.add_term(support::random_monomial(rng, 3, 2), Rational(coeff(rng)));
      gens.push_back(f);
    }
    BuchbergerOptions plain;
    plain.chain_criterion = false;
    const auto a = buchberger(gens, MonomialOrder::grevlex());
    const auto b = buchberger(gens, MonomialOrder::grevlex(), plain);
    EXPECT_EQ(a.elements, b.elements);
    EXPECT_TRUE(audit_confluence(a, 5).confluent());
    for (const Polynomial &p : gens)
      EXPECT_TRUE(normal_form(p, a).is_zero());
  }
}

TEST(NormalForm, Examples) {
  GroebnerBasis single;
  single.nvars = 3;
  single.order = MonomialOrder::marked();
  single.elements.push_back({parse("x[2]^2 - x[1]*x[3]", 3), Monomial{0, 2, 0}});
  EXPECT_EQ(normal_form(parse("x[2]^2", 3), single), parse("x[1]*x[3]", 3));

  const auto g = buchberger(pitman_stanley_gens(), MonomialOrder::grevlex());
  for (const GbElement &e : g.elements)
    EXPECT_TRUE(normal_form(e.poly, g).is_zero());
  // x1*x3*x4 reduces through x3*x4 -> x2*x5; x1*x2*x5 is standard.
  EXPECT_EQ(normal_form(parse("x[1]*x[3]*x[4]", 5), g),
            parse("x[1]*x[2]*x[5]", 5));
  EXPECT_EQ(normal_form(parse("x[1]*x[2]*x[5]", 5), g),
            parse("x[1]*x[2]*x[5]", 5));
}

TEST(NormalForm, IdempotentAndMembership) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const auto g = buchberger(pitman_stanley_gens(), MonomialOrder::grevlex());
  BuchbergerOptions general;
  general.force_general = true;
  const auto gg = buchberger(pitman_stanley_gens(), MonomialOrder::grevlex(), general);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f(5);
    for (int k = 0; k < 4; ++k)
      f.add_term(support::random_monomial(rng, 5, 2), Rational(coeff(rng)));
    const Polynomial r = normal_form(f, g);
    EXPECT_EQ(normal_form(r, g), r);
    EXPECT_FALSE(initial_ideal(g).contains(r.is_zero() ? Monomial(5)
                                                       : r.leading_monomial(g.order)) &&
                 !r.is_zero());
    // Multiples of a generator lie in the ideal.
    Polynomial h = pitman_stanley_gens()[trial % 3] * f;
    EXPECT_TRUE(normal_form(h, g).is_zero());
    EXPECT_TRUE(normal_form(h, gg).is_zero());
  }
}

TEST(InitialIdeal, ExamplesAndSquarefree) {
  const auto g = buchberger(pitman_stanley_gens(), MonomialOrder::grevlex());
  const MonomialIdeal in = initial_ideal(g);
  EXPECT_EQ(in.generators, (std::vector<Monomial>{{0, 0, 1, 1, 0},
                                                  {0, 1, 1, 0, 0},
                                                  {0, 2, 0, 0, 0}}));
  EXPECT_FALSE(is_squarefree(in));
  EXPECT_TRUE(is_squarefree(
      MonomialIdeal::from_generators(3, {{1, 1, 0}, {0, 0, 1}})));
  EXPECT_TRUE(is_squarefree(MonomialIdeal{}));
  const auto single = buchberger({parse("x[1]*x[4] - x[2]*x[3]", 4)},
                                 MonomialOrder::grevlex());
  EXPECT_EQ(initial_ideal(single).generators,
            (std::vector<Monomial>{{0, 1, 1, 0}}));
  EXPECT_EQ(MonomialIdeal::from_generators(2, {{2, 0}, {1, 0}, {1, 1}}).generators,
            (std::vector<Monomial>{{1, 0}}));
}

TEST(IdealEqual, SignAndSelf) {
  const auto g = buchberger(pitman_stanley_gens(), MonomialOrder::grevlex());
  EXPECT_TRUE(ideal_equal(g, g));
  const auto a = buchberger({parse("x[1] - x[2]", 2)}, MonomialOrder::lex());
  const auto b = buchberger({parse("x[2] - x[1]", 2)}, MonomialOrder::grevlex());
  EXPECT_TRUE(ideal_equal(a, b));
  const auto c = buchberger({parse("x[1] - x[2]^2", 2)}, MonomialOrder::lex());
  EXPECT_FALSE(ideal_equal(a, c));
}

TEST(Confluence, DetectsNonBasis) {
  // x1 - x2 and x1 - x3 marked on x1 miss x2 - x3.
  GroebnerBasis g;
  g.nvars = 3;
  g.order = MonomialOrder::lex();
  g.elements = {{parse("x[1] - x[2]", 3), Monomial{1, 0, 0}},
                {parse("x[1] - x[3]", 3), Monomial{1, 0, 0}}};
  const auto audit = audit_confluence(g);
  EXPECT_FALSE(audit.confluent());
  EXPECT_EQ(audit.witness_pair, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(ToricElimination, WorkedExamples) {
  const auto veronese = toric_ideal_elimination({{2, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(render(veronese), (std::vector<std::string>{"x[2]^2 - x[1]*x[3]"}));

  const auto square = toric_ideal_elimination({{1, 0, 1, 0}, {0, 1, 1, 0},
                                               {1, 0, 0, 1}, {0, 1, 0, 1}});
  EXPECT_EQ(render(square), (std::vector<std::string>{"x[2]*x[3] - x[1]*x[4]"}));

  const auto dup = toric_ideal_elimination({{1, 1}, {1, 1}});
  ASSERT_EQ(dup.size(), 1u);
  EXPECT_TRUE(ideal_equal(dup, buchberger({parse("x[1] - x[2]", 2)},
                                          MonomialOrder::grevlex())));

  EXPECT_THROW(toric_ideal_elimination({{1, 0}, {2, 0}}), InvalidArgument);
  EXPECT_THROW(toric_ideal_elimination({{0, 0}, {1, 0}}), InvalidArgument);
}

TEST(ToricElimination, PitmanStanleyMatchesHandBasis) {
  const auto g = toric_ideal_elimination(pitman_stanley_points());
  EXPECT_TRUE(ideal_equal(g, buchberger(pitman_stanley_gens(),
                                        MonomialOrder::grevlex())));
}

// Every basis element lies in the kernel, is homogeneous, and every
// brute-force binomial of degree <= 3 is in the computed ideal.
TEST(ToricElimination, OracleContainmentOnRandomConfigurations) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(2, 4), coord(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    // Random points on the hyperplane sum = s, up to 12 points, coords <= 3.
    const int d = dim(rng);
    const int s = 3;
    std::uniform_int_distribution<int> count(2, 12);
    const int k = count(rng);
    std::vector<IntVector> pts;
    while (static_cast<int>(pts.size()) < k) {
      IntVector p(static_cast<std::size_t>(d));
      int left = s;
      for (int i = 0; i + 1 < d; ++i) {
        std::uniform_int_distribution<int> c(0, left);
        const int v = c(rng);
        p.set(i, v);
        left -= v;
      }
      p.set(d - 1, left);
      pts.push_back(p);
    }
    const auto g = toric_ideal_elimination(pts);
    for (const GbElement &e : g.elements) {
      ASSERT_TRUE(e.is_pure_binomial());
      EXPECT_TRUE(e.poly.is_homogeneous());
      const Polynomial tail = e.tail();
      const Monomial v = tail.terms().begin()->first;
      EXPECT_EQ(monomial_image(e.lead, pts), monomial_image(v, pts));
    }
    for (int deg = 1; deg <= 3; ++deg) {
      for (const auto &[img, monos] : oracle::fibers(pts, deg))
        for (std::size_t i = 1; i < monos.size(); ++i)
          EXPECT_TRUE(
              normal_form(Polynomial::binomial(monos[0], monos[i]), g).is_zero());
    }
  }
}

TEST(GeneratorDegrees, WorkedExamples) {
  const auto ps = buchberger(pitman_stanley_gens(), MonomialOrder::grevlex());
  const auto degs = minimal_generator_degrees(ps, 3);
  EXPECT_EQ(degs, (std::map<std::int64_t, std::size_t>{{2, 3}}));
  // 15 quadratic monomials, 12 points of 2P.
  EXPECT_EQ(oracle::distinct_images(pitman_stanley_points(), 2), 12u);

  const auto principal = buchberger({parse("x[1]*x[4] - x[2]*x[3]", 4)},
                                    MonomialOrder::grevlex());
  EXPECT_EQ(minimal_generator_degrees(principal),
            (std::map<std::int64_t, std::size_t>{{2, 1}}));
  EXPECT_TRUE(minimal_generator_degrees(GroebnerBasis{}).empty());

  const auto nonhom = buchberger({parse("x[1]^2 - x[2]", 2)}, MonomialOrder::grevlex());
  EXPECT_THROW(minimal_generator_degrees(nonhom), InvalidArgument);
}

TEST(GeneratorDegrees, LinearPlusTwistedCubic) {
  // Twisted cubic needs three quadrics and no cubics; a duplicated point adds
  // one linear generator.
  const std::vector<IntVector> pts = {{3, 0}, {2, 1}, {1, 2}, {0, 3}, {0, 3}};
  const auto g = toric_ideal_elimination(pts);
  EXPECT_EQ(minimal_generator_degrees(g, 3),
            (std::map<std::int64_t, std::size_t>{{1, 1}, {2, 3}}));
}

TEST(GeneratorDegrees, MatchesFiberGraphOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = random_configuration(rng);
    const auto g = toric_ideal_elimination(pts);
    const auto degs = minimal_generator_degrees(g, 4);
    for (int d = 1; d <= 4; ++d) {
      const std::size_t expect = oracle::new_generators_in_degree(pts, d);
      const auto it = degs.find(d);
      EXPECT_EQ(it == degs.end() ? 0u : it->second, expect) << "degree " << d;
    }
  }
}

TEST(GeneratorDegrees, GenericNonBinomialGenerators) {
  // Generic forms are minimal generators and nothing else is needed.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coeff(1, 7);
  auto random_form = [&](int degree) {
    Polynomial f(3);
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree; ++b)
        f.add_term(Monomial{a, b, degree - a - b}, Rational(coeff(rng)));
    return f;
  };
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = buchberger({random_form(2), random_form(2), random_form(3)},
                              MonomialOrder::grevlex());
    ASSERT_FALSE(g.all_binomial());
    EXPECT_EQ(minimal_generator_degrees(g, 4),
              (std::map<std::int64_t, std::size_t>{{2, 2}, {3, 1}}));
  }
}
