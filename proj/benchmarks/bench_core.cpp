#include <benchmark/benchmark.h>

#include "vortex/cones.hpp"
#include "vortex/fourier_mukai.hpp"
#include "vortex/maps.hpp"
#include "vortex/metrics.hpp"
#include "vortex/model_io.hpp"
#include "vortex/moduli.hpp"
#include "vortex/report.hpp"

using namespace vortex;

namespace {

AbelianVarietyData abelian(std::vector<long> deltas) {
  AbelianVarietyData a;
  a.m = static_cast<int>(deltas.size());
  a.deltas = std::move(deltas);
  a.lambdas.assign(a.m, Rational(1));
  return a;
}

void BM_ChernClosedForm(benchmark::State& state) {
  std::vector<long> d(static_cast<std::size_t>(state.range(0)), 3);
  const auto a = abelian(d);
  for (auto _ : state) benchmark::DoNotOptimize(chern_closed_form(a));
}
BENCHMARK(BM_ChernClosedForm)->DenseRange(1, 3);

void BM_ChernFromCharacter(benchmark::State& state) {
  std::vector<long> d(static_cast<std::size_t>(state.range(0)), 3);
  const auto ch = ch_transform(abelian(d));
  for (auto _ : state) benchmark::DoNotOptimize(chern_from_character(ch));
}
BENCHMARK(BM_ChernFromCharacter)->DenseRange(1, 3);

void BM_AbelianSurfaceVolume(benchmark::State& state) {
  const long d = state.range(0);
  const auto model = line_bundle_model(AbelianVariety{2, {1, 1}}, Deltas{{d, d}}, 100, 1);
  for (auto _ : state) benchmark::DoNotOptimize(volume_moduli(model));
}
BENCHMARK(BM_AbelianSurfaceVolume)->DenseRange(1, 3);

void BM_ConeInterior(benchmark::State& state) {
  const WeightSystem ws({{1, 0, 1, 2, -1, 1}, {0, 1, 1, -1, 2, 1}, {1, 1, 0, 1, 1, -1}});
  const SigmaVector v{PiPoly(3), PiPoly(4) - PiPoly::pi(), PiPoly(2)};
  for (auto _ : state) benchmark::DoNotOptimize(in_cone_interior(ws, IndexSet::all(6), v));
}
BENCHMARK(BM_ConeInterior);

void BM_DimensionFormula(benchmark::State& state) {
  const WeightSystem ws({{1, 0, 1, 2, -1, 1}, {0, 1, 1, -1, 2, 1}, {1, 1, 0, 1, 1, -1}});
  const SigmaVector v{PiPoly(3), PiPoly(4) - PiPoly::pi(), PiPoly(2)};
  const std::vector<long> r{2, 3, 1, 4, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(moduli_dimension_glsm(ws, v, r));
}
BENCHMARK(BM_DimensionFormula);

void BM_UnstablePlanes(benchmark::State& state) {
  const ToricTarget t(WeightSystem({{1, 1, 0, 1}, {0, 1, 1, 1}}), {Rational(3), Rational(5)});
  for (auto _ : state) benchmark::DoNotOptimize(unstable_planes(t));
}
BENCHMARK(BM_UnstablePlanes);

void BM_FullReport(benchmark::State& state) {
  const auto file = parse_model(R"({
    "manifold": {"type": "abelian", "lambdas": ["1", "1"]},
    "weights": [[1]], "tau": ["100"], "e2": "1", "bundles": [{"deltas": [2, 4]}]})");
  for (auto _ : state) benchmark::DoNotOptimize(build_report(file, all_sections()));
}
BENCHMARK(BM_FullReport);

}  // namespace

BENCHMARK_MAIN();
