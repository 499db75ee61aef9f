#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace toricgp {

// Sorted list of 1-based ground indices.
using Subset = std::vector<int>;

std::string subset_key(const Subset &s); // "1,2,3"
Subset parse_subset_key(const std::string &key);

// Ordered tuple F = (S_1, ..., S_m) of nonempty subsets of [n]; repetitions
// allowed. P_F is the Minkowski sum of the unit simplices Delta_{S_i}.
struct SubsetFamily {
  int n = 0;
  std::vector<Subset> sets;

  std::size_t m() const { return sets.size(); }
  // Throws InvalidArgument unless every set is nonempty, sorted, and in [n].
  void validate() const;
  // Product of the set sizes, saturating at UINT64_MAX.
  std::uint64_t product_size() const;

  friend bool operator==(const SubsetFamily &, const SubsetFamily &) = default;
};

struct YParameters {
  int n = 0;
  std::map<Subset, std::int64_t> y;

  void validate() const;
};

struct BuildingSet {
  int n = 0;
  std::set<Subset> blocks;
};

struct BuildingSetViolation {
  std::optional<std::pair<Subset, Subset>> pair; // intersecting, union absent
  std::optional<int> missing_singleton;
};

struct BuildingSetCheck {
  bool ok = true;
  BuildingSetViolation witness;
};

// Simple undirected graph on vertices 1..n.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
};

// Each I with y_I > 0 appears y_I times; subsets ordered by size then lex.
SubsetFamily family_from_y(const YParameters &y);
SubsetFamily dilate_family(const SubsetFamily &f, int k);

BuildingSetCheck building_set_check(const BuildingSet &b);
BuildingSet graphical_building_set(const SimpleGraph &g);

enum class NamedFamily { Permutohedron, Associahedron, Cyclohedron, PitmanStanley };
NamedFamily parse_named_family(const std::string &name);
std::string to_string(NamedFamily f);
SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
// y_I = 1 on the non-singleton blocks of the family's building set.
SubsetFamily named_family(NamedFamily name, int n);
SubsetFamily named_family(const std::string &name, int n);
// Family with one copy of each non-singleton block.
SubsetFamily family_from_building_set(const BuildingSet &b);
// All building sets on [n] (singletons included), in a fixed order.
std::vector<BuildingSet> all_building_sets(int n);

} // namespace toricgp
