#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "toricgp/errors.hpp"
#include "toricgp/polytopes/lattice_points.hpp"
#include "toricgp/polytopes/subset_family.hpp"

using namespace toricgp;

namespace {

SubsetFamily fam(int n, std::vector<Subset> sets) { return {n, std::move(sets)}; }

std::set<IntVector> as_set(const std::vector<IntVector> &v) {
  return {v.begin(), v.end()};
}

YParameters random_y(std::mt19937_64 &rng, int n, int max_value) {
  std::uniform_int_distribution<int> val(0, max_value);
  YParameters y{n, {}};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Subset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        s.push_back(i + 1);
    const int v = val(rng);
    if (v > 0)
      y.y[s] = v;
  }
  return y;
}

} // namespace

TEST(FamilyFromY, Examples) {
  EXPECT_EQ(family_from_y({3, {{{1, 2}, 1}, {{1, 2, 3}, 1}}}),
            fam(3, {{1, 2}, {1, 2, 3}}));
  EXPECT_EQ(family_from_y({3, {{{1, 2}, 2}}}), fam(3, {{1, 2}, {1, 2}}));
  EXPECT_EQ(family_from_y({3, {}}), fam(3, {}));
  // Size first, then lex.
  EXPECT_EQ(family_from_y({3, {{{1, 2, 3}, 1}, {{2}, 1}, {{1, 3}, 1}}}),
            fam(3, {{2}, {1, 3}, {1, 2, 3}}));
  EXPECT_THROW(family_from_y({2, {{{1, 2}, -1}}}), InvalidArgument);
}

TEST(BuildingSet, CheckExamples) {
  EXPECT_TRUE(building_set_check({3, {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}}).ok);
  const auto bad = building_set_check({3, {{1}, {2}, {3}, {1, 2}, {2, 3}}});
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness.pair.has_value());
  EXPECT_EQ(bad.witness.pair->first, (Subset{1, 2}));
  EXPECT_EQ(bad.witness.pair->second, (Subset{2, 3}));
  const auto missing = building_set_check({3, {{1, 2}, {1}, {2}}});
  EXPECT_FALSE(missing.ok);
  EXPECT_EQ(missing.witness.missing_singleton, 3);
}

TEST(BuildingSet, GraphicalExamples) {
  EXPECT_EQ(graphical_building_set(path_graph(3)).blocks,
            (std::set<Subset>{{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}));
  EXPECT_EQ(graphical_building_set(complete_graph(3)).blocks.size(), 7u);
  EXPECT_EQ(graphical_building_set({2, {}}).blocks, (std::set<Subset>{{1}, {2}}));
}

TEST(BuildingSet, GraphicalAlwaysPassesCheck) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    SimpleGraph g{n, {}};
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2)
          g.edges.emplace_back(u, v);
    EXPECT_TRUE(building_set_check(graphical_building_set(g)).ok);
  }
}

TEST(BuildingSet, EnumerationOnThree) {
  const auto all = all_building_sets(3);
  EXPECT_EQ(all.size(), 12u);
  for (const auto &b : all)
    EXPECT_TRUE(building_set_check(b).ok);
  EXPECT_THROW(all_building_sets(5), InvalidArgument);
}

TEST(NamedFamily, Examples) {
  EXPECT_EQ(named_family("pitman_stanley", 3), fam(3, {{1, 2}, {1, 2, 3}}));
  EXPECT_EQ(named_family("associahedron", 3), fam(3, {{1, 2}, {2, 3}, {1, 2, 3}}));
  EXPECT_EQ(named_family("permutohedron", 3),
            fam(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
  EXPECT_EQ(named_family("cyclohedron", 4).sets.size(), 4u + 4u + 1u);
  EXPECT_THROW(named_family("hexahedron", 3), InvalidArgument);
  EXPECT_THROW(named_family("permutohedron", 1), InvalidArgument);
}

TEST(Minkowski, Examples) {
  const auto ps = minkowski_lattice_points(fam(3, {{1, 2}, {1, 2, 3}}));
  EXPECT_EQ(ps.size(), 6u);
  EXPECT_EQ(std::count(ps.points.begin(), ps.points.end(), IntVector{1, 1, 0}), 2);
  EXPECT_EQ(as_set(ps.points),
            (std::set<IntVector>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}}));
  EXPECT_EQ(ps.provenance.front(), (std::vector<int>{1, 1}));
  EXPECT_EQ(ps.provenance.back(), (std::vector<int>{2, 3}));

  EXPECT_EQ(as_set(minkowski_lattice_points(fam(3, {{1, 2, 3}})).points),
            (std::set<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(minkowski_lattice_points(fam(1, {{1}, {1}})).distinct().points,
            (std::vector<IntVector>{{2}}));
  EXPECT_EQ(minkowski_lattice_points(fam(2, {})).points,
            (std::vector<IntVector>{{0, 0}}));
  EXPECT_THROW(minkowski_lattice_points(fam(3, {{1, 2, 3}, {1, 2, 3}}), 8),
               BudgetExceeded);
}

TEST(Minkowski, DilationCounts) {
  const auto f = fam(3, {{1, 2}, {1, 2, 3}});
  EXPECT_EQ(dilate_family(f, 1), f);
  EXPECT_EQ(dilate_family(fam(2, {{1, 2}}), 2), fam(2, {{1, 2}, {1, 2}}));
  const auto two = dilate_family(f, 2);
  EXPECT_EQ(two.sets.size(), 4u);
  EXPECT_EQ(minkowski_lattice_points(two).distinct().size(), 12u);
  EXPECT_THROW(dilate_family(f, 0), InvalidArgument);
}

TEST(Minkowski, PermutationInvarianceAndHyperplane) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    auto f = family_from_y(random_y(rng, n, 1));
    const auto base = distinct_minkowski_points(f);
    for (const IntVector &p : minkowski_lattice_points(f).points)
      EXPECT_EQ(p.degree(), static_cast<std::int64_t>(f.m()));
    std::shuffle(f.sets.begin(), f.sets.end(), rng);
    EXPECT_EQ(distinct_minkowski_points(f), base);
    EXPECT_EQ(minkowski_lattice_points(f).distinct().points, base);
  }
}

TEST(PointRing, OrderIsFirstAppearance) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto f = family_from_y(random_y(rng, n, n == 4 ? 1 : 2));
    const auto ps = minkowski_lattice_points(f);
    std::vector<IntVector> first;
    std::vector<std::vector<int>> reps;
    std::set<IntVector> seen;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      if (seen.insert(ps.points[k]).second) {
        first.push_back(ps.points[k]);
        reps.push_back(ps.provenance[k]);
      }
    }
    const PointRing ring = point_ring(f);
    EXPECT_EQ(ring.points, first);
    EXPECT_EQ(ring.representatives, reps);
  }
  EXPECT_FALSE(lex_min_tuple(fam(2, {{1}, {1, 2}}), IntVector{0, 2}).has_value());
}

TEST(Cayley, Examples) {
  const auto c = cayley_sum_points(fam(2, {{1, 2}, {1, 2}}));
  EXPECT_EQ(c.points, (std::vector<IntVector>{{1, 0, 1, 0}, {0, 1, 1, 0},
                                              {1, 0, 0, 1}, {0, 1, 0, 1}}));
  EXPECT_EQ(cayley_sum_points(fam(1, {{1}})).points, (std::vector<IntVector>{{1, 1}}));
  EXPECT_EQ(cayley_sum_points(fam(3, {{1, 2}, {1, 2, 3}})).size(), 5u);
}

TEST(Cayley, SizeAndEdgePolytopeIdentity) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto f = family_from_y(random_y(rng, n, 2));
    std::size_t total = 0;
    for (const auto &s : f.sets)
      total += s.size();
    const auto c = cayley_sum_points(f);
    EXPECT_EQ(c.size(), total);
    const auto g = family_bipartite_graph(f);
    EXPECT_FALSE(find_odd_cycle(g).has_value());
    EXPECT_EQ(edge_polytope_points(g).points, c.points);
  }
}

TEST(EdgePolytope, ExamplesAndOddCycle) {
  const SimpleGraph square{4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}};
  EXPECT_EQ(edge_polytope_points(square).points,
            (std::vector<IntVector>{{1, 0, 1, 0}, {0, 1, 1, 0},
                                    {1, 0, 0, 1}, {0, 1, 0, 1}}));
  EXPECT_EQ(edge_polytope_points({2, {{1, 2}}}).points,
            (std::vector<IntVector>{{1, 1}}));
  const SimpleGraph pentagon = cycle_graph(5);
  const auto cycle = find_odd_cycle(pentagon);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->size() % 2, 1u);
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : pentagon.edges)
    edges.insert({std::min(u, v), std::max(u, v)});
  for (std::size_t k = 0; k < cycle->size(); ++k) {
    int u = (*cycle)[k], v = (*cycle)[(k + 1) % cycle->size()];
    EXPECT_TRUE(edges.count({std::min(u, v), std::max(u, v)}));
  }
  EXPECT_THROW(edge_polytope_points(complete_graph(3)), InvalidArgument);
}

TEST(YToZ, Examples) {
  const auto z = y_to_z({2, {{{1}, 1}, {{2}, 2}, {{1, 2}, 3}}});
  EXPECT_EQ(z.z.at({1}), 1);
  EXPECT_EQ(z.z.at({2}), 2);
  EXPECT_EQ(z.z.at({1, 2}), 6);
  for (const auto &[s, v] : y_to_z({3, {}}).z)
    EXPECT_EQ(v, 0);
  const auto ps = y_to_z({3, {{{1, 2}, 1}, {{1, 2, 3}, 1}}});
  EXPECT_EQ(ps.z.at({1, 2}), 1);
  EXPECT_EQ(ps.z.at({1, 2, 3}), 2);
  EXPECT_EQ(ps.z.at({1, 3}), 0);
}

TEST(YToZ, MonotoneUnderInclusion) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto z = y_to_z(random_y(rng, 4, 3));
    for (const auto &[a, va] : z.z)
      for (const auto &[b, vb] : z.z)
        if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
          EXPECT_LE(va, vb);
  }
}

TEST(ZLatticePoints, Examples) {
  const YParameters y{2, {{{1}, 1}, {{2}, 2}, {{1, 2}, 3}}};
  EXPECT_EQ(z_lattice_points(y_to_z(y)),
            (std::vector<IntVector>{{1, 5}, {2, 4}, {3, 3}, {4, 2}}));
  EXPECT_EQ(distinct_minkowski_points(family_from_y(y)), z_lattice_points(y_to_z(y)));
  EXPECT_EQ(z_lattice_points(y_to_z({3, {}})), (std::vector<IntVector>{{0, 0, 0}}));
  const YParameters ps{3, {{{1, 2}, 1}, {{1, 2, 3}, 1}}};
  EXPECT_EQ(z_lattice_points(y_to_z(ps)), distinct_minkowski_points(family_from_y(ps)));
}

// Integer-level identity P^Y = P^Z for every n <= 4 instance sampled, both
// with singletons kept as summands and with them re-added as a translation.
TEST(ZLatticePoints, MatchesMinkowskiForSmallN) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const YParameters y = random_y(rng, n, n <= 2 ? 3 : 1);
    const auto z = z_lattice_points(y_to_z(y));
    EXPECT_EQ(distinct_minkowski_points(family_from_y(y)), z);

    YParameters body{n, {}};
    for (const auto &[s, v] : y.y)
      if (s.size() > 1)
        body.y[s] = v;
    const IntVector shift = singleton_translation(y);
    std::vector<IntVector> shifted;
    for (const IntVector &p : distinct_minkowski_points(family_from_y(body)))
      shifted.push_back(p + shift);
    std::sort(shifted.begin(), shifted.end());
    EXPECT_EQ(shifted, z);
  }
}
