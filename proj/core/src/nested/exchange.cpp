#include "toricgp/nested/exchange.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>

#include "toricgp/errors.hpp"

namespace toricgp {

namespace {

using Tuple = std::vector<int>;
using State = std::vector<Tuple>; // sorted rows, each sorted

std::vector<Tuple> factors(const Monomial &u, const SegreIndex &idx) {
  std::vector<Tuple> out;
  for (std::size_t x = 0; x < u.dim(); ++x)
    for (Exponent e = 0; e < u[x]; ++e)
      out.push_back(idx.tuple(x));
  return out;
}

State normalize(std::vector<Tuple> rows) {
  for (Tuple &r : rows)
    r = sort_tuple(std::move(r));
  std::sort(rows.begin(), rows.end());
  return rows;
}

// For one index multiset: placed[xi][value] = an arrangement with `value` at
// position xi, when one exists.
class Arrangements {
public:
  explicit Arrangements(const SubsetFamily &f) : f_(f) {}

  const std::vector<std::map<int, Tuple>> &of(const Tuple &sorted) {
    auto it = cache_.find(sorted);
    if (it != cache_.end())
      return it->second;
    std::vector<std::map<int, Tuple>> placed(sorted.size());
    Tuple p = sorted;
    do {
      bool ok = true;
      for (std::size_t k = 0; k < p.size() && ok; ++k)
        ok = std::binary_search(f_.sets[k].begin(), f_.sets[k].end(), p[k]);
      if (ok)
        for (std::size_t k = 0; k < p.size(); ++k)
          placed[k].emplace(p[k], p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache_.emplace(sorted, std::move(placed)).first->second;
  }

private:
  const SubsetFamily &f_;
  std::map<Tuple, std::vector<std::map<int, Tuple>>> cache_;
};

struct Node {
  std::vector<Tuple> rows; // concrete factors
  std::size_t parent = 0;
  ExchangeStep step;
};

} // namespace

ExchangeTrace exchange_reduce(const Polynomial &b, const SegreIndex &idx,
                              std::uint64_t budget) {
  if (b.nvars() != idx.x_count() || !b.is_binomial())
    throw InvalidArgument("exchange_reduce needs a binomial x^u - x^v in K[x]");
  Monomial u = b.terms().begin()->first, v = std::next(b.terms().begin())->first;
  if (b.coefficient(u) < 0)
    std::swap(u, v);
  if (u.degree() != v.degree() || idx.psi(u) != idx.psi(v))
    throw InvalidArgument("binomial is not in the kernel of psi");

  ExchangeTrace trace;
  trace.right = factors(v, idx);
  const State goal = normalize(trace.right);
  Arrangements arr(idx.family());

  std::vector<Node> nodes{{factors(u, idx), 0, {}}};
  std::map<State, std::size_t> seen{{normalize(nodes[0].rows), 0}};
  std::deque<std::size_t> queue{0};
  std::optional<std::size_t> found;
  if (seen.begin()->first == goal)
    found = 0;
  while (!found && !queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const std::vector<Tuple> rows = nodes[cur].rows;
    for (std::size_t p = 0; p < rows.size() && !found; ++p) {
      for (std::size_t q = p + 1; q < rows.size() && !found; ++q) {
        const auto &ap = arr.of(sort_tuple(rows[p]));
        const auto &aq = arr.of(sort_tuple(rows[q]));
        for (std::size_t xi = 0; xi < idx.m() && !found; ++xi) {
          for (const auto &[alpha, ta] : ap[xi]) {
            for (const auto &[beta, tb] : aq[xi]) {
              if (alpha == beta)
                continue;
              std::vector<Tuple> next = rows;
              next[p] = ta;
              next[q] = tb;
              std::swap(next[p][xi], next[q][xi]);
              State key = normalize(next);
              if (seen.count(key))
                continue;
              if (seen.size() >= budget)
                throw BudgetExceeded("exchange search exceeds " +
                                     std::to_string(budget) + " states");
              seen.emplace(key, nodes.size());
              nodes.push_back({std::move(next), cur, {ta, tb, xi}});
              queue.push_back(nodes.size() - 1);
              if (key == goal) {
                found = nodes.size() - 1;
                break;
              }
            }
            if (found)
              break;
          }
        }
      }
    }
  }
  if (!found) {
    trace.left = nodes[0].rows;
    return trace;
  }
  for (std::size_t k = *found; k != 0; k = nodes[k].parent)
    trace.steps.push_back(nodes[k].step);
  std::reverse(trace.steps.begin(), trace.steps.end());

  // Pair each final factor with a sort-equal right factor, exact matches
  // first.
  std::vector<Tuple> rest = nodes[*found].rows;
  std::vector<char> used(rest.size(), 0);
  trace.left.assign(trace.right.size(), {});
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 0; k < trace.right.size(); ++k) {
      if (!trace.left[k].empty())
        continue;
      for (std::size_t r = 0; r < rest.size(); ++r) {
        if (used[r])
          continue;
        const bool match = pass == 0
                               ? rest[r] == trace.right[k]
                               : sort_tuple(rest[r]) == sort_tuple(trace.right[k]);
        if (match) {
          used[r] = 1;
          trace.left[k] = rest[r];
          break;
        }
      }
    }
  trace.residual_in_j = true;
  trace.residual_zero = true;
  for (std::size_t k = 0; k < trace.right.size(); ++k) {
    trace.residual_in_j = trace.residual_in_j && !trace.left[k].empty();
    trace.residual_zero = trace.residual_zero && trace.left[k] == trace.right[k];
  }
  return trace;
}

} // namespace toricgp
