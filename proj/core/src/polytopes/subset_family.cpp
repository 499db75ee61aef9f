#include "toricgp/polytopes/subset_family.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

constexpr int kMaxGround = 20;
constexpr int kMaxGraphVertices = 1 << 16;

void check_ground(int n) {
  if (n < 0 || n > kMaxGround)
    throw InvalidArgument("ground set size " + std::to_string(n) +
                          " outside [0, " + std::to_string(kMaxGround) + "]");
}

void check_subset(const Subset &s, int n) {
  if (s.empty())
    throw InvalidArgument("empty subset");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n)
      throw InvalidArgument("subset element " + std::to_string(s[i]) +
                            " outside [1, " + std::to_string(n) + "]");
    if (i > 0 && s[i] <= s[i - 1])
      throw InvalidArgument("subset {" + subset_key(s) +
                            "} is not strictly increasing");
  }
}

Subset subset_from_mask(unsigned mask, int n) {
  Subset s;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i))
      s.push_back(i + 1);
  return s;
}

bool size_then_lex(const Subset &a, const Subset &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

} // namespace

std::string subset_key(const Subset &s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Subset parse_subset_key(const std::string &key) {
  Subset s;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      s.push_back(v);
    } catch (const std::exception &) {
      throw InvalidArgument("bad subset key '" + key + "'");
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

void SubsetFamily::validate() const {
  check_ground(n);
  for (const Subset &s : sets)
    check_subset(s, n);
}

std::uint64_t SubsetFamily::product_size() const {
  std::uint64_t p = 1;
  for (const Subset &s : sets) {
    if (__builtin_mul_overflow(p, s.size(), &p))
      return std::numeric_limits<std::uint64_t>::max();
  }
  return p;
}

void YParameters::validate() const {
  check_ground(n);
  for (const auto &[s, v] : y) {
    check_subset(s, n);
    if (v < 0)
      throw InvalidArgument("negative multiplicity y_{" + subset_key(s) + "}");
  }
}

void SimpleGraph::validate() const {
  if (n < 0 || n > kMaxGraphVertices)
    throw InvalidArgument("graph vertex count " + std::to_string(n) +
                          " out of range");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n)
      throw InvalidArgument("edge endpoint outside [1, n]");
    if (u == v)
      throw InvalidArgument("loops are not allowed in a simple graph");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw InvalidArgument("repeated edge in a simple graph");
  }
}

SubsetFamily family_from_y(const YParameters &y) {
  y.validate();
  std::vector<Subset> keys;
  for (const auto &[s, v] : y.y)
    if (v > 0)
      keys.push_back(s);
  std::sort(keys.begin(), keys.end(), size_then_lex);
  SubsetFamily f{y.n, {}};
  for (const Subset &s : keys)
    for (std::int64_t k = 0; k < y.y.at(s); ++k)
      f.sets.push_back(s);
  return f;
}

SubsetFamily dilate_family(const SubsetFamily &f, int k) {
  if (k < 1)
    throw InvalidArgument("dilation factor must be at least 1");
  SubsetFamily out{f.n, {}};
  out.sets.reserve(f.sets.size() * static_cast<std::size_t>(k));
  for (const Subset &s : f.sets)
    for (int c = 0; c < k; ++c)
      out.sets.push_back(s);
  return out;
}

BuildingSetCheck building_set_check(const BuildingSet &b) {
  BuildingSetCheck result;
  for (int i = 1; i <= b.n; ++i) {
    if (!b.blocks.count({i})) {
      result.ok = false;
      result.witness.missing_singleton = i;
      return result;
    }
  }
  for (auto it = b.blocks.begin(); it != b.blocks.end(); ++it) {
    for (auto jt = std::next(it); jt != b.blocks.end(); ++jt) {
      Subset inter, uni;
      std::set_intersection(it->begin(), it->end(), jt->begin(), jt->end(),
                            std::back_inserter(inter));
      if (inter.empty())
        continue;
      std::set_union(it->begin(), it->end(), jt->begin(), jt->end(),
                     std::back_inserter(uni));
      if (!b.blocks.count(uni)) {
        result.ok = false;
        result.witness.pair = {*it, *jt};
        return result;
      }
    }
  }
  return result;
}

BuildingSet graphical_building_set(const SimpleGraph &g) {
  g.validate();
  check_ground(g.n);
  std::vector<unsigned> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u - 1] |= 1u << (v - 1);
    adj[v - 1] |= 1u << (u - 1);
  }
  BuildingSet b{g.n, {}};
  for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
    unsigned start = mask & (~mask + 1);
    unsigned reached = start, frontier = start;
    while (frontier) {
      unsigned next = 0;
      for (int i = 0; i < g.n; ++i)
        if (frontier & (1u << i))
          next |= adj[i] & mask;
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached == mask)
      b.blocks.insert(subset_from_mask(mask, g.n));
  }
  return b;
}

NamedFamily parse_named_family(const std::string &name) {
  if (name == "permutohedron")
    return NamedFamily::Permutohedron;
  if (name == "associahedron")
    return NamedFamily::Associahedron;
  if (name == "cyclohedron")
    return NamedFamily::Cyclohedron;
  if (name == "pitman_stanley")
    return NamedFamily::PitmanStanley;
  throw InvalidArgument("unknown named family '" + name + "'");
}

std::string to_string(NamedFamily f) {
  switch (f) {
  case NamedFamily::Permutohedron:
    return "permutohedron";
  case NamedFamily::Associahedron:
    return "associahedron";
  case NamedFamily::Cyclohedron:
    return "cyclohedron";
  case NamedFamily::PitmanStanley:
    return "pitman_stanley";
  }
  return "?";
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g{n, {}};
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      g.edges.emplace_back(u, v);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g{n, {}};
  for (int u = 1; u < n; ++u)
    g.edges.emplace_back(u, u + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3)
    g.edges.emplace_back(1, n);
  return g;
}

SubsetFamily family_from_building_set(const BuildingSet &b) {
  YParameters y{b.n, {}};
  for (const Subset &s : b.blocks)
    if (s.size() > 1)
      y.y[s] = 1;
  return family_from_y(y);
}

SubsetFamily named_family(NamedFamily name, int n) {
  if (n < 2)
    throw InvalidArgument("named families need n >= 2");
  check_ground(n);
  switch (name) {
  case NamedFamily::Permutohedron:
    return family_from_building_set(graphical_building_set(complete_graph(n)));
  case NamedFamily::Associahedron:
    return family_from_building_set(graphical_building_set(path_graph(n)));
  case NamedFamily::Cyclohedron:
    return family_from_building_set(graphical_building_set(cycle_graph(n)));
  case NamedFamily::PitmanStanley: {
    BuildingSet b{n, {}};
    for (int i = 1; i <= n; ++i)
      b.blocks.insert({i});
    for (int i = 2; i <= n; ++i) {
      Subset prefix;
      for (int j = 1; j <= i; ++j)
        prefix.push_back(j);
      b.blocks.insert(prefix);
    }
    return family_from_building_set(b);
  }
  }
  throw InvalidArgument("unknown named family");
}

SubsetFamily named_family(const std::string &name, int n) {
  return named_family(parse_named_family(name), n);
}

std::vector<BuildingSet> all_building_sets(int n) {
  check_ground(n);
  if (n > 4)
    throw InvalidArgument("building set enumeration is limited to n <= 4");
  std::vector<unsigned> candidates;
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    if (__builtin_popcount(mask) > 1)
      candidates.push_back(mask);
  std::vector<BuildingSet> out;
  const unsigned total = 1u << candidates.size();
  for (unsigned choice = 0; choice < total; ++choice) {
    std::set<unsigned> chosen;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (choice & (1u << k))
        chosen.insert(candidates[k]);
    bool closed = true;
    for (unsigned a : chosen) {
      for (unsigned b : chosen)
        if ((a & b) && !chosen.count(a | b)) {
          closed = false;
          break;
        }
      if (!closed)
        break;
    }
    if (!closed)
      continue;
    BuildingSet b{n, {}};
    for (int i = 1; i <= n; ++i)
      b.blocks.insert({i});
    for (unsigned mask : chosen)
      b.blocks.insert(subset_from_mask(mask, n));
    out.push_back(std::move(b));
  }
  return out;
}

} // namespace toricgp
