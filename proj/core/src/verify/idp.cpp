#include "toricgp/verify/idp.hpp"

#include <algorithm>
#include <string>

#include "toricgp/errors.hpp"
#include "toricgp/polytopes/lattice_points.hpp"

namespace toricgp {

namespace {

void guard(std::size_t size, std::uint64_t cap) {
  if (size > cap)
    throw BudgetExceeded("IDP check with " + std::to_string(size) +
                         " points exceeds the cap of " + std::to_string(cap));
}

// Compares the k-fold sumsets of `base` with `dilate(k)` for k = 2..k_max.
template <class Dilate>
IdpReport compare(const std::vector<IntVector> &base, int k_max,
                  std::uint64_t cap, Dilate &&dilate) {
  IdpReport out;
  out.k_max = k_max;
  std::vector<IntVector> acc = base;
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  const std::vector<IntVector> p = acc;
  for (int k = 2; k <= k_max; ++k) {
    guard(acc.size() * p.size(), cap * 16);
    acc = sumset(acc, p);
    guard(acc.size(), cap);
    std::vector<IntVector> target = dilate(k);
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());
    guard(target.size(), cap);
    IdpStep step{k, acc.size(), target.size(), acc == target};
    out.steps.push_back(step);
    if (!step.pass && out.pass) {
      out.pass = false;
      out.failing_k = k;
      std::vector<IntVector> missing;
      std::set_difference(target.begin(), target.end(), acc.begin(), acc.end(),
                          std::back_inserter(missing));
      if (missing.empty()) // a sumset point outside the dilate
        std::set_difference(acc.begin(), acc.end(), target.begin(), target.end(),
                            std::back_inserter(missing));
      out.counterexample = missing.front();
      break;
    }
  }
  return out;
}

} // namespace

IdpReport idp_check(const SubsetFamily &f, int k_max, std::uint64_t cap) {
  if (k_max < 2)
    throw InvalidArgument("k_max must be at least 2");
  f.validate();
  return compare(distinct_minkowski_points(f), k_max, cap, [&](int k) {
    return distinct_minkowski_points(dilate_family(f, k));
  });
}

IdpReport idp_check_raw(const std::vector<std::vector<IntVector>> &dilates,
                        std::uint64_t cap) {
  if (dilates.size() < 2)
    throw InvalidArgument("raw IDP check needs the points of P and of 2P");
  return compare(dilates[0], static_cast<int>(dilates.size()), cap,
                 [&](int k) { return dilates[static_cast<std::size_t>(k - 1)]; });
}

std::optional<std::vector<IntVector>>
decompose(const IntVector &p, const std::vector<IntVector> &points, int k) {
  std::vector<IntVector> chosen;
  auto rec = [&](auto &&self, const IntVector &rest, std::size_t from,
                 int left) -> bool {
    if (left == 0)
      return rest.is_zero();
    for (std::size_t i = from; i < points.size(); ++i) {
      const IntVector &q = points[i];
      if (q.dim() != rest.dim())
        throw DimensionMismatch("point dimension differs");
      bool fits = true;
      for (std::size_t c = 0; c < q.dim() && fits; ++c)
        fits = q[c] <= rest[c];
      if (!fits)
        continue;
      chosen.push_back(q);
      if (self(self, rest - q, i, left - 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, p, 0, k))
    return chosen;
  return std::nullopt;
}

} // namespace toricgp
