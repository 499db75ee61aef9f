#include <benchmark/benchmark.h>

#include "toricgp/groebner/toric.hpp"
#include "toricgp/nested/segre.hpp"
#include "toricgp/nested/shibuta.hpp"
#include "toricgp/polytopes/lattice_points.hpp"

using namespace toricgp;

namespace {

SubsetFamily family_for(int which, int n) {
  switch (which) {
  case 0:
    return named_family(NamedFamily::Permutohedron, n);
  case 1:
    return named_family(NamedFamily::Associahedron, n);
  default:
    return named_family(NamedFamily::PitmanStanley, n);
  }
}

const char *name_of(int which) {
  return which == 0 ? "permutohedron" : which == 1 ? "associahedron" : "pitman_stanley";
}

void BM_Elimination(benchmark::State &state) {
  const SubsetFamily f = family_for(state.range(0), state.range(1));
  const PointRing ring = point_ring(f);
  std::size_t size = 0;
  for (auto _ : state) {
    GroebnerBasis g = toric_ideal_elimination(ring.points);
    size = g.size();
    benchmark::DoNotOptimize(g);
  }
  state.SetLabel(name_of(state.range(0)));
  state.counters["points"] = ring.points.size();
  state.counters["basis"] = size;
}

void BM_ShibutaPipeline(benchmark::State &state) {
  const SubsetFamily f = family_for(state.range(0), state.range(1));
  const SegreIndex idx(f);
  std::size_t size = 0;
  for (auto _ : state) {
    ShibutaResult r = shibuta_gb(idx);
    ProjectedBasis p = project_out_j(r.basis, idx);
    size = p.basis.size();
    benchmark::DoNotOptimize(p);
  }
  state.SetLabel(name_of(state.range(0)));
  state.counters["x_variables"] = idx.x_count();
  state.counters["projected"] = size;
}

void BM_SegreSorting(benchmark::State &state) {
  const SegreIndex idx(dilate_family(SubsetFamily{3, {{1, 2, 3}}}, state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(segre_sorting_gb(idx));
  state.counters["x_variables"] = idx.x_count();
}

} // namespace

BENCHMARK(BM_Elimination)
    ->Args({0, 3})
    ->Args({1, 3})
    ->Args({2, 3})
    ->Args({2, 4})
    ->Args({1, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShibutaPipeline)
    ->Args({0, 3})
    ->Args({1, 3})
    ->Args({2, 3})
    ->Args({2, 4})
    ->Args({1, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SegreSorting)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
