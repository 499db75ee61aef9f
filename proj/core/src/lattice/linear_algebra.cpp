#include "toricgp/lattice/linear_algebra.hpp"

#include <numeric>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix &a) {
  std::vector<std::size_t> pivots;
  if (a.empty())
    return pivots;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (Rational &x : a[r])
      x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix &a,
                                                  const std::vector<Rational> &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("right-hand side length differs from row count");
  if (a.empty())
    return std::vector<Rational>{};
  const std::size_t cols = a.front().size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols)
      throw DimensionMismatch("ragged matrix");
    aug[i].push_back(b[i]);
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols)
    return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug[r][cols];
  return x;
}

std::size_t matrix_rank(RationalMatrix a) { return rref(a).size(); }

mpz_class determinant(IntegerMatrix a) {
  const std::size_t n = a.size();
  for (const auto &row : a)
    if (row.size() != n)
      throw DimensionMismatch("determinant of a non-square matrix");
  if (n == 0)
    return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool SparseRank::add(Vector v) {
  // Each stored row starts at its pivot, so eliminating left to right only
  // touches coordinates ahead of the cursor.
  auto it = v.begin();
  while (it != v.end()) {
    if (it->second == 0) {
      it = v.erase(it);
      continue;
    }
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Rational f = it->second;
    const std::size_t key = it->first;
    for (const auto &[c, x] : row->second)
      v[c] -= f * x;
    it = v.erase(v.find(key));
  }
  if (v.empty())
    return false;
  const std::size_t pivot = v.begin()->first;
  const Rational inv = Rational(1) / v.begin()->second;
  for (auto &[c, x] : v)
    x *= inv;
  rows_.emplace(pivot, std::move(v));
  return true;
}

GraphicRank::GraphicRank(std::size_t nodes) : parent_(nodes + 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t GraphicRank::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool GraphicRank::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b)
    return false;
  parent_[std::max(a, b)] = std::min(a, b);
  ++rank_;
  return true;
}

bool GraphicRank::add_difference(std::size_t a, std::size_t b) {
  return unite(a + 1, b + 1);
}

bool GraphicRank::add_unit(std::size_t a) { return unite(a + 1, 0); }

} // namespace toricgp
