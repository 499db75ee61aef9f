#include <benchmark/benchmark.h>

#include "toricgp/polytopes/lattice_points.hpp"
#include "toricgp/verify/idp.hpp"
#include "toricgp/verify/triangulation.hpp"

using namespace toricgp;

namespace {

void BM_DistinctPoints(benchmark::State &state) {
  const SubsetFamily f =
      dilate_family(named_family(NamedFamily::Permutohedron, 4), state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    auto pts = distinct_minkowski_points(f);
    count = pts.size();
    benchmark::DoNotOptimize(pts);
  }
  state.counters["points"] = count;
}

void BM_MultisetPoints(benchmark::State &state) {
  const SubsetFamily f = named_family(NamedFamily::Permutohedron, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(minkowski_lattice_points(f));
  state.counters["tuples"] = static_cast<double>(f.product_size());
}

void BM_IdpCheck(benchmark::State &state) {
  const SubsetFamily f = named_family(NamedFamily::Permutohedron, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(idp_check(f, state.range(0)));
}

void BM_LexMinTuple(benchmark::State &state) {
  const SubsetFamily f = named_family(NamedFamily::Permutohedron, 4);
  const auto pts = distinct_minkowski_points(f);
  for (auto _ : state)
    for (const IntVector &p : pts)
      benchmark::DoNotOptimize(lex_min_tuple(f, p));
  state.counters["points"] = pts.size();
}

void BM_UnimodularProbe(benchmark::State &state) {
  const SubsetFamily f = named_family(NamedFamily::Permutohedron, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(unimodular_triangulation_probe(f));
}

} // namespace

BENCHMARK(BM_DistinctPoints)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultisetPoints)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdpCheck)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LexMinTuple)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnimodularProbe)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
