#include "toricgp/polytopes/lattice_points.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

void sort_unique(std::vector<IntVector> &pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

} // namespace

LatticePointSet LatticePointSet::distinct() const {
  LatticePointSet out{dim, points, {}};
  sort_unique(out.points);
  return out;
}

LatticePointSet minkowski_lattice_points(const SubsetFamily &f,
                                         std::uint64_t cap) {
  f.validate();
  const std::uint64_t total = f.product_size();
  if (total > cap)
    throw BudgetExceeded("Minkowski enumeration of " + std::to_string(total) +
                         " tuples exceeds the cap of " + std::to_string(cap));
  LatticePointSet out{f.n, {}, {}};
  out.points.reserve(total);
  out.provenance.reserve(total);
  const std::size_t m = f.m();
  std::vector<std::size_t> pos(m, 0);
  while (true) {
    IntVector p(static_cast<std::size_t>(f.n));
    std::vector<int> tuple(m);
    for (std::size_t k = 0; k < m; ++k) {
      tuple[k] = f.sets[k][pos[k]];
      p.add_at(tuple[k] - 1, 1);
    }
    out.points.push_back(std::move(p));
    out.provenance.push_back(std::move(tuple));
    std::size_t k = m;
    while (k > 0) {
      --k;
      if (++pos[k] < f.sets[k].size())
        break;
      pos[k] = 0;
      if (k == 0) {
        k = m + 1;
        break;
      }
    }
    if (k == m + 1 || m == 0)
      break;
  }
  return out;
}

std::vector<IntVector> sumset(const std::vector<IntVector> &a,
                              const std::vector<IntVector> &b) {
  std::vector<IntVector> out;
  out.reserve(a.size() * b.size());
  for (const IntVector &p : a)
    for (const IntVector &q : b)
      out.push_back(p + q);
  sort_unique(out);
  return out;
}

std::vector<IntVector> distinct_minkowski_points(const SubsetFamily &f) {
  f.validate();
  std::vector<IntVector> acc{IntVector(static_cast<std::size_t>(f.n))};
  for (const Subset &s : f.sets) {
    std::vector<IntVector> simplex;
    for (int j : s)
      simplex.push_back(IntVector::unit(f.n, j - 1));
    acc = sumset(acc, simplex);
  }
  return acc;
}

namespace {

// Can the sets f.sets[from..] be assigned one element each so that element j
// is used exactly need[j] times? Augmenting-path bipartite b-matching.
bool assignable(const SubsetFamily &f, std::size_t from,
                const std::vector<int> &need) {
  const std::size_t m = f.m();
  std::vector<int> slot_owner; // slot -> set index
  std::vector<int> slot_elem;
  for (int j = 0; j < f.n; ++j)
    for (int c = 0; c < need[j]; ++c)
      slot_elem.push_back(j + 1);
  if (slot_elem.size() != m - from)
    return false;
  slot_owner.assign(slot_elem.size(), -1);
  std::vector<char> seen;
  auto augment = [&](auto &&self, std::size_t set) -> bool {
    for (std::size_t s = 0; s < slot_elem.size(); ++s) {
      if (seen[s])
        continue;
      const Subset &subset = f.sets[set];
      if (!std::binary_search(subset.begin(), subset.end(), slot_elem[s]))
        continue;
      seen[s] = 1;
      if (slot_owner[s] < 0 ||
          self(self, static_cast<std::size_t>(slot_owner[s]))) {
        slot_owner[s] = static_cast<int>(set);
        return true;
      }
    }
    return false;
  };
  for (std::size_t set = from; set < m; ++set) {
    seen.assign(slot_elem.size(), 0);
    if (!augment(augment, set))
      return false;
  }
  return true;
}

} // namespace

std::optional<std::vector<int>> lex_min_tuple(const SubsetFamily &f,
                                              const IntVector &p) {
  f.validate();
  if (p.dim() != static_cast<std::size_t>(f.n))
    throw DimensionMismatch("point dimension differs from ground set size");
  std::vector<int> need(p.vec().begin(), p.vec().end());
  if (!assignable(f, 0, need))
    return std::nullopt;
  std::vector<int> tuple;
  for (std::size_t k = 0; k < f.m(); ++k) {
    bool placed = false;
    for (int j : f.sets[k]) {
      if (need[j - 1] == 0)
        continue;
      --need[j - 1];
      if (assignable(f, k + 1, need)) {
        tuple.push_back(j);
        placed = true;
        break;
      }
      ++need[j - 1];
    }
    if (!placed)
      return std::nullopt;
  }
  return tuple;
}

PointRing point_ring(const SubsetFamily &f) {
  std::vector<std::pair<std::vector<int>, IntVector>> rows;
  for (IntVector &p : distinct_minkowski_points(f)) {
    auto t = lex_min_tuple(f, p);
    if (!t)
      throw Error("internal: Minkowski point without a tuple");
    rows.emplace_back(std::move(*t), std::move(p));
  }
  std::sort(rows.begin(), rows.end());
  PointRing ring;
  for (auto &[t, p] : rows) {
    ring.representatives.push_back(std::move(t));
    ring.points.push_back(std::move(p));
  }
  return ring;
}

LatticePointSet cayley_sum_points(const SubsetFamily &f) {
  f.validate();
  const std::size_t n = static_cast<std::size_t>(f.n), m = f.m();
  LatticePointSet out{static_cast<int>(n + m), {}, {}};
  for (std::size_t i = 0; i < m; ++i) {
    for (int j : f.sets[i]) {
      IntVector p(n + m);
      p.set(j - 1, 1);
      p.set(n + i, 1);
      out.points.push_back(std::move(p));
      out.provenance.push_back({static_cast<int>(i + 1), j});
    }
  }
  return out;
}

SimpleGraph family_bipartite_graph(const SubsetFamily &f) {
  f.validate();
  SimpleGraph g{f.n + static_cast<int>(f.m()), {}};
  for (std::size_t i = 0; i < f.m(); ++i)
    for (int j : f.sets[i])
      g.edges.emplace_back(j, f.n + static_cast<int>(i) + 1);
  return g;
}

std::optional<std::vector<int>> find_odd_cycle(const SimpleGraph &g) {
  g.validate();
  std::vector<std::vector<int>> adj(g.n + 1);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(g.n + 1, -1), parent(g.n + 1, 0), depth(g.n + 1, 0);
  for (int root = 1; root <= g.n; ++root) {
    if (color[root] >= 0)
      continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          // Walk both endpoints up to their common ancestor.
          std::vector<int> left{u}, right{v};
          int a = u, b = v;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          if (left.back() != a)
            left.push_back(a);
          if (right.back() == a)
            right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return std::nullopt;
}

LatticePointSet edge_polytope_points(const SimpleGraph &g) {
  if (auto cycle = find_odd_cycle(g)) {
    std::string s;
    for (int v : *cycle)
      s += (s.empty() ? "" : "-") + std::to_string(v);
    throw InvalidArgument("graph is not bipartite; odd cycle " + s);
  }
  LatticePointSet out{g.n, {}, {}};
  for (auto [u, v] : g.edges) {
    IntVector p(static_cast<std::size_t>(g.n));
    p.set(u - 1, 1);
    p.set(v - 1, 1);
    out.points.push_back(std::move(p));
    out.provenance.push_back({u, v});
  }
  return out;
}

ZParameters y_to_z(const YParameters &y) {
  y.validate();
  ZParameters z{y.n, {}};
  for (unsigned mask = 1; mask < (1u << y.n); ++mask) {
    Subset s;
    for (int i = 0; i < y.n; ++i)
      if (mask & (1u << i))
        s.push_back(i + 1);
    Rational total(0);
    for (const auto &[j, v] : y.y)
      if (std::includes(s.begin(), s.end(), j.begin(), j.end()))
        total += v;
    z.z.emplace(std::move(s), total);
  }
  return z;
}

std::vector<IntVector> z_lattice_points(const ZParameters &z) {
  if (z.n < 1)
    throw InvalidArgument("z-parameters need n >= 1");
  Subset full;
  for (int i = 1; i <= z.n; ++i)
    full.push_back(i);
  auto it = z.z.find(full);
  if (it == z.z.end())
    throw InvalidArgument("z-parameters lack z_[n]");
  mpz_class floor_total;
  mpz_fdiv_q(floor_total.get_mpz_t(), it->second.get_num_mpz_t(),
             it->second.get_den_mpz_t());
  if (!floor_total.fits_sint_p() || floor_total < 0)
    throw InvalidArgument("z_[n] out of range");
  if (Rational(floor_total) != it->second)
    return {};
  const int total = static_cast<int>(floor_total.get_si());

  std::vector<std::pair<unsigned, Rational>> constraints;
  for (const auto &[s, v] : z.z) {
    if (s == full)
      continue;
    unsigned mask = 0;
    for (int i : s)
      mask |= 1u << (i - 1);
    constraints.emplace_back(mask, v);
  }

  std::vector<IntVector> out;
  std::vector<Exponent> t(z.n, 0);
  // Compositions of `total` into n nonnegative parts.
  auto recurse = [&](auto &&self, int idx, int remaining) -> void {
    if (idx == z.n - 1) {
      t[idx] = remaining;
      for (const auto &[mask, bound] : constraints) {
        long sum = 0;
        for (int i = 0; i < z.n; ++i)
          if (mask & (1u << i))
            sum += t[i];
        if (Rational(sum) < bound)
          return;
      }
      out.emplace_back(t);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      t[idx] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  recurse(recurse, 0, total);
  sort_unique(out);
  return out;
}

IntVector singleton_translation(const YParameters &y) {
  y.validate();
  IntVector t(static_cast<std::size_t>(y.n));
  for (const auto &[s, v] : y.y)
    if (s.size() == 1)
      t.add_at(s[0] - 1, checked_exponent(v));
  return t;
}

} // namespace toricgp
