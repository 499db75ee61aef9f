// One PASS/FAIL line per acceptance criterion; exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles/cycles.hpp"
#include "oracles/simplex_points.hpp"
#include "support/builders.hpp"
#include "toricgp/toricgp.hpp"

using namespace toricgp;

namespace {

// Runtime limits in seconds.
constexpr double kIdpSuiteLimit = 120.0;
constexpr double kEquivalenceLimit = 60.0;
constexpr double kEngineLimit = 60.0;

constexpr int kIdpKMax = 3;
constexpr std::size_t kRandomFamilies = 50;
constexpr std::uint64_t kFamilySeed = 20240611;
constexpr std::size_t kEquivalenceInstances = 25;
constexpr std::uint64_t kEquivalenceSeed = 4;
constexpr std::size_t kProp63Samples = 50;
constexpr std::uint64_t kProp63Seed = 63;
constexpr std::size_t kEngineTrials = 1000;
constexpr std::uint64_t kEngineSeed = 8;
constexpr std::size_t kCycleOrders = 400;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Line> results;

void report(int id, bool pass, const std::string &detail) {
  results.push_back({id, pass, detail});
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::string key(const SubsetFamily &f) {
  std::ostringstream s;
  s << f.n << ":";
  for (const Subset &x : f.sets)
    s << "{" << subset_key(x) << "}";
  return s.str();
}

// Building-set families on [3] (singletons included, y in {0,1,2}) and
// seeded random families on [4].
std::vector<SubsetFamily> theorem_instances() {
  std::vector<SubsetFamily> out;
  for (const YParameters &y : building_set_parameters(3, 2, true))
    out.push_back(family_from_y(y));
  for (SubsetFamily &f : sample_families(kFamilySeed, kRandomFamilies, {4, 4, 200}))
    out.push_back(std::move(f));
  return out;
}

struct Projected {
  ShibutaResult shibuta;
  ProjectedBasis projected;
};

Projected pipeline(const SubsetFamily &f) {
  const SegreIndex idx(f);
  ShibutaResult s = shibuta_gb(idx);
  ProjectedBasis p = project_out_j(s.basis, idx);
  return {std::move(s), std::move(p)};
}

// 1-3 share the instance set and the pipeline results.
void theorem_criteria() {
  const auto instances = theorem_instances();
  std::size_t idp_ok = 0;
  std::string idp_fail;
  const auto t0 = Clock::now();
  for (const SubsetFamily &f : instances) {
    try {
      if (idp_check(f, kIdpKMax).pass)
        ++idp_ok;
      else if (idp_fail.empty())
        idp_fail = " first failure " + key(f);
    } catch (const Error &e) {
      if (idp_fail.empty())
        idp_fail = " " + key(f) + ": " + e.what();
    }
  }
  const double idp_time = since(t0);
  report(1, idp_ok == instances.size() && idp_time < kIdpSuiteLimit,
         "idp k<=" + std::to_string(kIdpKMax) + " on " + std::to_string(idp_ok) +
             "/" + std::to_string(instances.size()) + " instances in " +
             std::to_string(idp_time) + " s (limit " +
             std::to_string(kIdpSuiteLimit) + " s)" + idp_fail);

  std::size_t sq_ok = 0, quad_ok = 0;
  std::string sq_fail, quad_fail;
  for (const SubsetFamily &f : instances) {
    try {
      const Projected r = pipeline(f);
      if (r.projected.squarefree && r.shibuta.report.squarefree)
        ++sq_ok;
      else if (sq_fail.empty())
        sq_fail = " first failure " + key(f);
      const auto deg = minimal_generator_degrees(r.projected.basis);
      if (deg.empty() || deg.rbegin()->first <= 2)
        ++quad_ok;
      else if (quad_fail.empty())
        quad_fail = " first failure " + key(f);
    } catch (const Error &e) {
      if (sq_fail.empty())
        sq_fail = " " + key(f) + ": " + e.what();
      if (quad_fail.empty())
        quad_fail = sq_fail;
    }
  }
  report(2, sq_ok == instances.size(),
         "squarefree projected initial ideal on " + std::to_string(sq_ok) + "/" +
             std::to_string(instances.size()) + " instances" + sq_fail);

  const auto ps = minimal_generator_degrees(
      pipeline(named_family(NamedFamily::PitmanStanley, 3)).projected.basis);
  const bool ps_ok = ps == std::map<std::int64_t, std::size_t>{{2, 3}};
  report(3, quad_ok == instances.size() && ps_ok,
         "max generator degree <= 2 on " + std::to_string(quad_ok) + "/" +
             std::to_string(instances.size()) +
             " instances; pitman_stanley n=3 degrees " +
             io::degrees_to_json(ps).dump() + quad_fail);
}

void equivalence_criterion() {
  const auto t0 = Clock::now();
  const auto families =
      sample_families(kEquivalenceSeed, kEquivalenceInstances, {4, 4, 200});
  std::size_t agree = 0;
  std::string fail;
  for (const SubsetFamily &f : families) {
    try {
      const SegreIndex idx(f);
      const ShibutaResult s = shibuta_gb(idx);
      const ProjectedBasis p = project_out_j(s.basis, idx);
      const GroebnerBasis points =
          toric_ideal_elimination(point_ring(f).points, MonomialOrder::grevlex());
      const GroebnerBasis multiset = toric_ideal_elimination(
          minkowski_lattice_points(f).points, MonomialOrder::grevlex());
      if (ideal_equal(p.basis, points) && ideal_equal(s.basis, multiset))
        ++agree;
      else if (fail.empty())
        fail = " first disagreement " + key(f);
    } catch (const Error &e) {
      if (fail.empty())
        fail = " " + key(f) + ": " + e.what();
    }
  }
  const double t = since(t0);
  report(4,
         agree == families.size() && families.size() >= 20 &&
             t < kEquivalenceLimit,
         "shibuta = elimination (projected and full ring) on " +
             std::to_string(agree) + "/" + std::to_string(families.size()) +
             " instances in " + std::to_string(t) + " s (limit " +
             std::to_string(kEquivalenceLimit) + " s)" + fail);
}

void prop63_criterion() {
  std::size_t ok = 0, total = 0;
  std::string fail;
  auto run = [&](const YParameters &y) {
    ++total;
    const Prop63Report r = cross_check_prop63(y);
    if (r.pass)
      ++ok;
    else if (fail.empty())
      fail = " first failure " + io::to_json(y).dump();
  };
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        run(YParameters{2, {{{1}, a}, {{2}, b}, {{1, 2}, c}}});
  const std::size_t exhaustive = total;
  std::mt19937_64 rng(kProp63Seed);
  std::uniform_int_distribution<int> value(0, 3);
  for (std::size_t s = 0; s < kProp63Samples; ++s) {
    YParameters y{3, {}};
    for (unsigned mask = 1; mask < 8; ++mask) {
      Subset set;
      for (int i = 0; i < 3; ++i)
        if (mask & (1u << i))
          set.push_back(i + 1);
      y.y[set] = value(rng);
    }
    run(y);
  }
  report(5, ok == total,
         "Y and Z point sets agree on " + std::to_string(ok) + "/" +
             std::to_string(total) + " (" + std::to_string(exhaustive) +
             " exhaustive n=2, " + std::to_string(kProp63Samples) +
             " sampled n=3)" + fail);
}

// Basis elements of ker phi_B as oracle matchings.
std::set<std::pair<oracle::Matching, oracle::Matching>>
basis_cycles(const SegreIndex &idx, const GroebnerBasis &g, bool &all_cycles) {
  std::set<std::pair<oracle::Matching, oracle::Matching>> out;
  for (const GbElement &e : g.elements) {
    if (!e.is_pure_binomial() || !cycle_of_binomial(e.poly, idx)) {
      all_cycles = false;
      continue;
    }
    const Monomial tail = e.tail().terms().begin()->first;
    oracle::Matching a, b;
    for (std::size_t y = 0; y < idx.y_count(); ++y) {
      if (e.lead[y])
        a.push_back(idx.y_label(y));
      if (tail[y])
        b.push_back(idx.y_label(y));
    }
    if (b < a)
      std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

void even_cycle_criterion() {
  struct Case {
    const char *name;
    SubsetFamily f;
    std::optional<std::size_t> expected;
  };
  const std::vector<Case> cases = {
      {"K22", {2, {{1, 2}, {1, 2}}}, 1},
      {"K23", {3, {{1, 2, 3}, {1, 2, 3}}}, 3},
      {"K33", {3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}}, std::nullopt},
  };
  bool pass = true;
  std::ostringstream detail;
  std::mt19937_64 rng(6);
  for (const Case &c : cases) {
    const SegreIndex idx(c.f);
    const auto cycles = oracle::bipartite_cycles(c.f);
    bool all_cycles = true, subset = true;
    const GroebnerBasis g = even_cycle_gb(idx, idx.y_order());
    auto seen = basis_cycles(idx, g, all_cycles);
    for (const auto &cyc : seen)
      subset = subset && cycles.count(cyc);
    // Every cycle is a circuit and shows up in some reduced basis.
    std::vector<std::size_t> ranking(idx.y_count());
    std::iota(ranking.begin(), ranking.end(), 0);
    for (std::size_t k = 0; k < kCycleOrders && seen.size() < cycles.size(); ++k) {
      std::shuffle(ranking.begin(), ranking.end(), rng);
      for (const auto &cyc : basis_cycles(
               idx, even_cycle_gb(idx, MonomialOrder::lex_ranking(ranking)),
               all_cycles)) {
        subset = subset && cycles.count(cyc);
        seen.insert(cyc);
      }
    }
    const bool count_ok = !c.expected || (g.size() == *c.expected &&
                                          cycles.size() == *c.expected);
    const bool ok = all_cycles && subset && count_ok && seen == cycles;
    pass = pass && ok;
    detail << (&c == &cases.front() ? "" : "; ") << c.name << " basis "
           << g.size() << " cycles " << cycles.size()
           << " covered " << seen.size() << (ok ? "" : " (mismatch)");
  }
  report(6, pass, detail.str());
}

void reeve_criterion() {
  const std::vector<IntVector> reeve{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
  const IdpReport r = idp_check_raw(
      {oracle::simplex_points(reeve, 1), oracle::simplex_points(reeve, 2)});
  const bool ok = !r.pass && r.failing_k == 2 && r.counterexample;
  report(7, ok,
         std::string("raw IDP on the Reeve simplex ") +
             (r.pass ? "passed" : "failed") + " at k=" +
             (r.failing_k ? std::to_string(*r.failing_k) : "-") +
             (r.counterexample ? " with " + r.counterexample->to_string() : ""));
}

void engine_criterion() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kEngineSeed);
  std::size_t ok = 0;
  std::string fail;
  for (std::size_t trial = 0; trial < kEngineTrials; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const int ngens = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Polynomial> gens;
    for (int g = 0; g < ngens; ++g) {
      Monomial u = support::random_monomial(rng, n, 4);
      Monomial v = support::random_monomial(rng, n, 4);
      if (u == v)
        continue;
      Polynomial p(n);
      p.add_term(u, Rational(1));
      p.add_term(v, Rational(-1));
      gens.push_back(std::move(p));
    }
    if (gens.empty()) {
      ++ok;
      continue;
    }
    std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(),
                                         MonomialOrder::lex()};
    std::vector<std::int64_t> row(n);
    for (auto &w : row)
      w = std::uniform_int_distribution<int>(0, 3)(rng);
    orders.push_back(MonomialOrder::weighted({row}));
    const MonomialOrder &ord = orders[trial % orders.size()];
    BuchbergerOptions guard;
    guard.max_degree = std::numeric_limits<std::int32_t>::max();
    try {
      const GroebnerBasis g = buchberger(gens, ord, guard);
      bool sound = audit_confluence(g).confluent();
      for (const Polynomial &p : gens)
        sound = sound && normal_form(p, g).is_zero();
      for (int k = 0; k < 3; ++k) {
        Polynomial f(n);
        for (int t = 0; t < 4; ++t)
          f.add_term(support::random_monomial(rng, n, 5),
                     Rational(std::uniform_int_distribution<int>(-3, 3)(rng)));
        const Polynomial r = normal_form(f, g);
        sound = sound && normal_form(r, g) == r;
      }
      if (sound)
        ++ok;
      else if (fail.empty())
        fail = " first failure at trial " + std::to_string(trial);
    } catch (const Error &e) {
      if (fail.empty())
        fail = " trial " + std::to_string(trial) + ": " + e.what();
    }
  }
  const double t = since(t0);
  report(8, ok == kEngineTrials && t < kEngineLimit,
         "confluent and idempotent on " + std::to_string(ok) + "/" +
             std::to_string(kEngineTrials) + " random binomial ideals in " +
             std::to_string(t) + " s (limit " + std::to_string(kEngineLimit) +
             " s)" + fail);
}

// Families on [n], m sets, up to reordering of the sets and of [n].
std::vector<SubsetFamily> bipartite_instances() {
  std::set<std::vector<unsigned>> seen;
  std::vector<SubsetFamily> out;
  for (int n = 1; n <= 4; ++n) {
    const unsigned full = (1u << n) - 1;
    std::vector<int> perm(n);
    for (int m = 1; m <= 4; ++m) {
      std::vector<unsigned> masks(m, 1);
      while (true) {
        std::vector<unsigned> best;
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<unsigned> img;
          for (unsigned mask : masks) {
            unsigned t = 0;
            for (int i = 0; i < n; ++i)
              if (mask & (1u << i))
                t |= 1u << perm[i];
            img.push_back(t);
          }
          std::sort(img.begin(), img.end());
          if (best.empty() || img < best)
            best = img;
        } while (std::next_permutation(perm.begin(), perm.end()));
        best.push_back(static_cast<unsigned>(n) << 16);
        if (seen.insert(best).second) {
          SubsetFamily f{n, {}};
          for (unsigned mask : masks) {
            Subset s;
            for (int i = 0; i < n; ++i)
              if (mask & (1u << i))
                s.push_back(i + 1);
            f.sets.push_back(std::move(s));
          }
          out.push_back(std::move(f));
        }
        // Next nondecreasing mask sequence.
        int k = m - 1;
        while (k >= 0 && masks[k] == full)
          --k;
        if (k < 0)
          break;
        ++masks[k];
        for (int j = k + 1; j < m; ++j)
          masks[j] = masks[k];
      }
    }
  }
  return out;
}

void unimodular_criterion() {
  const auto families = bipartite_instances();
  std::size_t ok = 0, simplices = 0;
  std::string fail;
  for (const SubsetFamily &f : families) {
    const UnimodularityReport r = unimodular_triangulation_probe(f);
    simplices += r.simplices;
    if (r.pass)
      ++ok;
    else if (fail.empty())
      fail = " first failure " + key(f);
  }
  report(9, ok == families.size(),
         "every placing simplex unimodular on " + std::to_string(ok) + "/" +
             std::to_string(families.size()) + " bipartite graphs (" +
             std::to_string(simplices) + " simplices)" + fail);
}

} // namespace

int main() {
  const std::vector<std::pair<int, std::function<void()>>> criteria = {
      {1, theorem_criteria},  {4, equivalence_criterion},
      {5, prop63_criterion},  {6, even_cycle_criterion},
      {7, reeve_criterion},   {8, engine_criterion},
      {9, unimodular_criterion},
  };
  for (const auto &[id, body] : criteria) {
    try {
      body();
    } catch (const std::exception &e) {
      report(id, false, std::string("aborted: ") + e.what());
    }
  }
  bool all = results.size() == 9;
  for (const Line &l : results)
    all = all && l.pass;
  std::printf("acceptance: %s (%zu criteria)\n", all ? "PASS" : "FAIL",
              results.size());
  return all ? 0 : 1;
}
