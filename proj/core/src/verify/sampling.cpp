#include "toricgp/verify/sampling.hpp"

#include <map>
#include <set>

#include "toricgp/errors.hpp"

namespace toricgp {

SubsetFamily random_family(std::mt19937_64 &rng, const SamplingOptions &options) {
  if (options.n < 1 || options.n > 20 || options.max_m < 1)
    throw InvalidArgument("sampling needs 1 <= n <= 20 and max_m >= 1");
  std::uniform_int_distribution<int> md(1, options.max_m);
  std::uniform_int_distribution<unsigned> mask(1, (1u << options.n) - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    SubsetFamily f{options.n, {}};
    const int m = md(rng);
    for (int i = 0; i < m; ++i) {
      const unsigned b = mask(rng);
      Subset s;
      for (int j = 0; j < options.n; ++j)
        if (b & (1u << j))
          s.push_back(j + 1);
      f.sets.push_back(std::move(s));
    }
    if (f.product_size() <= options.max_product)
      return f;
  }
  throw InvalidArgument("no family within the product bound after 100000 draws");
}

std::vector<SubsetFamily> sample_families(std::uint64_t seed, std::size_t count,
                                          const SamplingOptions &options) {
  std::mt19937_64 rng(seed);
  std::vector<SubsetFamily> out;
  std::set<std::vector<Subset>> seen;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt > 1000 * count + 1000)
      throw InvalidArgument("not enough distinct families for the sample");
    SubsetFamily f = random_family(rng, options);
    if (seen.insert(f.sets).second)
      out.push_back(std::move(f));
  }
  return out;
}

std::vector<YParameters> building_set_parameters(int n, int max_y,
                                                 bool with_singletons) {
  if (max_y < 0)
    throw InvalidArgument("max_y must be nonnegative");
  std::vector<YParameters> out;
  std::set<std::map<Subset, std::int64_t>> seen;
  for (const BuildingSet &b : all_building_sets(n)) {
    std::vector<Subset> blocks;
    for (const Subset &s : b.blocks)
      if (with_singletons || s.size() > 1)
        blocks.push_back(s);
    std::vector<int> y(blocks.size(), 0);
    while (true) {
      YParameters p{n, {}};
      bool any = false;
      for (std::size_t k = 0; k < blocks.size(); ++k)
        if (y[k]) {
          p.y.emplace(blocks[k], y[k]);
          any = true;
        }
      if (any && seen.insert(p.y).second)
        out.push_back(std::move(p));
      std::size_t k = 0;
      while (k < y.size() && ++y[k] > max_y)
        y[k++] = 0;
      if (k == y.size())
        break;
    }
  }
  return out;
}

} // namespace toricgp
