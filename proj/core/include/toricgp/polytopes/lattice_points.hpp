#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "toricgp/lattice/int_vector.hpp"
#include "toricgp/lattice/rational.hpp"
#include "toricgp/polytopes/subset_family.hpp"

namespace toricgp {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Multiset of lattice points. When provenance is nonempty it runs parallel
// to points; for Minkowski sums entry k is the tuple (j_1, ..., j_m) with
// point = e_{j_1} + ... + e_{j_m}.
struct LatticePointSet {
  int dim = 0;
  std::vector<IntVector> points;
  std::vector<std::vector<int>> provenance;

  // Sorted, duplicates removed, provenance dropped.
  LatticePointSet distinct() const;
  std::size_t size() const { return points.size(); }
};

// The multiset { e_{j_1} + ... + e_{j_m} : j_k in S_k } in odometer order
// of the tuples (last position fastest). An empty family yields the origin.
// Throws BudgetExceeded when prod |S_i| exceeds `cap`.
LatticePointSet minkowski_lattice_points(const SubsetFamily &f,
                                         std::uint64_t cap = kDefaultEnumerationCap);

// Distinct points of P_F by iterated sumsets with deduplication; never
// materializes the full product. Sorted.
std::vector<IntVector> distinct_minkowski_points(const SubsetFamily &f);

// { a + b : a in A, b in B }, sorted and deduplicated.
std::vector<IntVector> sumset(const std::vector<IntVector> &a,
                              const std::vector<IntVector> &b);

// Lexicographically smallest tuple (j_1, ..., j_m), j_k in S_k, with
// e_{j_1} + ... + e_{j_m} = p; nullopt when p is not in P_F.
std::optional<std::vector<int>> lex_min_tuple(const SubsetFamily &f,
                                              const IntVector &p);

// Distinct points of P_F ordered by their lex-smallest tuples, which is the
// order of first appearance in minkowski_lattice_points. This is the
// variable order of K[x] for I_{P_F}.
struct PointRing {
  std::vector<IntVector> points;
  std::vector<std::vector<int>> representatives;
};
PointRing point_ring(const SubsetFamily &f);

// Points (e_j, e_i) in Z^{n+m} for j in S_i; ground coordinates first, then
// the copy index. Provenance entries are {i, j}.
LatticePointSet cayley_sum_points(const SubsetFamily &f);

// Bipartite graph on 1..n (ground) and n+1..n+m (copies) with edges
// {j, n+i} for j in S_i, listed in Cayley-point order.
SimpleGraph family_bipartite_graph(const SubsetFamily &f);

// Vertex sequence of an odd cycle, or nullopt when the graph is bipartite.
std::optional<std::vector<int>> find_odd_cycle(const SimpleGraph &g);

// One point e_u + e_v per edge, in edge order. Throws InvalidArgument naming
// an odd cycle when the graph is not bipartite.
LatticePointSet edge_polytope_points(const SimpleGraph &g);

struct ZParameters {
  int n = 0;
  std::map<Subset, Rational> z;
};

// z_I = sum of y_J over nonempty J subset of I, for every nonempty I.
ZParameters y_to_z(const YParameters &y);

// All t in Z^n with sum t = z_[n] and sum_{i in I} t_i >= z_I for each
// proper nonempty I, by bounded search. Sorted.
std::vector<IntVector> z_lattice_points(const ZParameters &z);

// sum of y_{i} e_i over singletons.
IntVector singleton_translation(const YParameters &y);

} // namespace toricgp
