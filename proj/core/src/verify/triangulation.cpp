#include "toricgp/verify/triangulation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "toricgp/errors.hpp"
#include "toricgp/lattice/linear_algebra.hpp"
#include "toricgp/polytopes/lattice_points.hpp"

namespace toricgp {

namespace {

using Diff = std::vector<long>;

Diff difference(const IntVector &a, const IntVector &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("points of differing dimension");
  Diff d(a.dim());
  for (std::size_t k = 0; k < d.size(); ++k)
    d[k] = static_cast<long>(a[k]) - static_cast<long>(b[k]);
  return d;
}

class Placing {
public:
  explicit Placing(const std::vector<IntVector> &pts) : pts_(pts) {}

  Triangulation run() {
    for (std::size_t i = 0; i < pts_.size(); ++i)
      insert(i);
    return {simplices_.empty() ? -1 : static_cast<int>(basis_.size()),
            simplices_};
  }

private:
  bool in_span(const Diff &d) const {
    RationalMatrix a(d.size());
    std::vector<Rational> b;
    for (std::size_t r = 0; r < d.size(); ++r) {
      for (const Diff &v : basis_)
        a[r].emplace_back(v[r]);
      b.emplace_back(d[r]);
    }
    if (basis_.empty())
      return std::all_of(d.begin(), d.end(), [](long x) { return x == 0; });
    return solve_linear(a, b).has_value();
  }

  // Ambient coordinates on which the projection of the span is injective.
  void rebuild_chart() {
    chart_.clear();
    RationalMatrix picked;
    const std::size_t ambient = pts_[base_].dim();
    for (std::size_t r = 0; r < ambient && chart_.size() < basis_.size(); ++r) {
      std::vector<Rational> row;
      for (const Diff &v : basis_)
        row.emplace_back(v[r]);
      picked.push_back(std::move(row));
      if (matrix_rank(picked) == picked.size())
        chart_.push_back(r);
      else
        picked.pop_back();
    }
  }

  // Side of x relative to the hyperplane spanned by `face` inside the span.
  int orientation(const std::vector<std::size_t> &face, std::size_t x) const {
    IntegerMatrix m;
    auto row = [&](std::size_t v) {
      std::vector<mpz_class> r;
      for (std::size_t c : chart_)
        r.emplace_back(static_cast<long>(pts_[v][c]) -
                       static_cast<long>(pts_[face[0]][c]));
      return r;
    };
    for (std::size_t k = 1; k < face.size(); ++k)
      m.push_back(row(face[k]));
    m.push_back(row(x));
    return sgn(determinant(m));
  }

  void insert(std::size_t i) {
    if (simplices_.empty()) {
      base_ = i;
      simplices_.push_back({i});
      return;
    }
    Diff d = difference(pts_[i], pts_[base_]);
    if (!in_span(d)) {
      basis_.push_back(std::move(d));
      rebuild_chart();
      for (auto &s : simplices_)
        s.push_back(i);
      return;
    }
    // Boundary facets (in exactly one simplex) with their opposite vertex.
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> faces;
    for (const auto &s : simplices_)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop)
            f.push_back(s[k]);
        std::sort(f.begin(), f.end());
        auto &slot = faces[f];
        ++slot.first;
        slot.second = s[drop];
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto &[f, info] : faces) {
      if (info.first != 1)
        continue;
      const int side = orientation(f, i);
      if (side != 0 && side == -orientation(f, info.second)) {
        auto s = f;
        s.push_back(i);
        added.push_back(std::move(s));
      }
    }
    simplices_.insert(simplices_.end(), added.begin(), added.end());
  }

  const std::vector<IntVector> &pts_;
  std::size_t base_ = 0;
  std::vector<Diff> basis_;
  std::vector<std::size_t> chart_;
  std::vector<std::vector<std::size_t>> simplices_;
};

} // namespace

Triangulation placing_triangulation(const std::vector<IntVector> &points) {
  Triangulation t = Placing(points).run();
  for (auto &s : t.simplices)
    std::sort(s.begin(), s.end());
  std::sort(t.simplices.begin(), t.simplices.end());
  return t;
}

mpz_class normalized_volume(const std::vector<IntVector> &vertices) {
  if (vertices.empty())
    throw InvalidArgument("a simplex needs at least one vertex");
  const std::size_t d = vertices.size() - 1;
  if (d == 0)
    return 1;
  std::vector<Diff> rows;
  for (std::size_t k = 1; k <= d; ++k)
    rows.push_back(difference(vertices[k], vertices[0]));
  const std::size_t ambient = rows[0].size();
  if (d > ambient)
    throw InvalidArgument("too many vertices for an affinely independent set");
  // gcd over all d-column minors.
  mpz_class g = 0;
  std::vector<std::size_t> cols(d);
  for (std::size_t k = 0; k < d; ++k)
    cols[k] = k;
  while (true) {
    IntegerMatrix m(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c : cols)
        m[r].emplace_back(rows[r][c]);
    mpz_class det = determinant(m);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    if (g == 1)
      break;
    std::size_t k = d;
    while (k > 0 && cols[k - 1] == ambient - d + k - 1)
      --k;
    if (k == 0)
      break;
    ++cols[k - 1];
    for (std::size_t j = k; j < d; ++j)
      cols[j] = cols[j - 1] + 1;
  }
  if (g == 0)
    throw InvalidArgument("vertices are affinely dependent");
  return g;
}

UnimodularityReport unimodular_triangulation_probe(std::vector<IntVector> points,
                                                   std::size_t max_points) {
  if (points.size() > max_points)
    throw BudgetExceeded("triangulation probe with " +
                         std::to_string(points.size()) +
                         " points exceeds the cap of " + std::to_string(max_points));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const Triangulation t = placing_triangulation(points);
  UnimodularityReport out;
  out.points = points.size();
  out.dim = t.dim;
  out.simplices = t.simplices.size();
  for (const auto &s : t.simplices) {
    std::vector<IntVector> verts;
    for (std::size_t v : s)
      verts.push_back(points[v]);
    const mpz_class vol = normalized_volume(verts);
    if (vol != 1) {
      out.pass = false;
      out.witness = s;
      out.witness_volume = vol;
      break;
    }
  }
  return out;
}

UnimodularityReport unimodular_triangulation_probe(const SubsetFamily &f) {
  return unimodular_triangulation_probe(
      edge_polytope_points(family_bipartite_graph(f)).points);
}

} // namespace toricgp
