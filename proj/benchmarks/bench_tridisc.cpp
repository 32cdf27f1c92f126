#include <benchmark/benchmark.h>

#include "tridisc/constructor.hpp"
#include "tridisc/developer.hpp"
#include "tridisc/enumerator.hpp"
#include "tridisc/isomorphism.hpp"

using namespace tridisc;

static void BM_CanonicalCode(benchmark::State& state) {
  const auto disc = generate_patch({PatchSpec::Shape::Rhombus, static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
  const auto mode = static_cast<IsoMode>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(disc, mode));
  state.counters["faces"] = disc.num_faces();
}
BENCHMARK(BM_CanonicalCode)->ArgsProduct({{4, 8, 16}, {0, 1, 2}});

static void BM_IsomorphismPair(benchmark::State& state) {
  const auto [a, b] = counterexample_pair(PatchSpec::parse("rhombus:6"), 2, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a.disc, b.disc, IsoMode::AllowReflection));
}
BENCHMARK(BM_IsomorphismPair)->Arg(2)->Arg(3);

static void BM_BranchedCover(benchmark::State& state) {
  const auto base = generate_patch({PatchSpec::Shape::Hexagon, static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
  VertexId centre = 0;
  while (boundary_distance(base, centre) != state.range(0)) ++centre;
  for (auto _ : state) benchmark::DoNotOptimize(branched_cover(base, centre, 2));
}
BENCHMARK(BM_BranchedCover)->Arg(4)->Arg(8);

static void BM_DevelopCut(benchmark::State& state) {
  const auto base = generate_patch({PatchSpec::Shape::Hexagon, static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
  VertexId centre = 0;
  while (boundary_distance(base, centre) != state.range(0)) ++centre;
  const auto cover = branched_cover(base, centre, 2);
  for (auto _ : state) {
    const CutDisc cut = cut_along_shortest_path(cover.disc);
    benchmark::DoNotOptimize(develop(cut));
  }
  state.counters["faces"] = cover.disc.num_faces();
}
BENCHMARK(BM_DevelopCut)->Arg(4)->Arg(8);

static void BM_EnumerateDoubledRhombus(benchmark::State& state) {
  const auto base = generate_patch({PatchSpec::Shape::Rhombus, static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
  BoundaryWord word = boundary_word(base);
  const BoundaryWord once = word;
  word.insert(word.end(), once.begin(), once.end());
  const int cap = 4 * static_cast<int>(state.range(0) * state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fillings(word, 12, cap));
}
BENCHMARK(BM_EnumerateDoubledRhombus)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_UniquenessSweep(benchmark::State& state) {
  SweepOptions opts;
  opts.max_length = static_cast<int>(state.range(0));
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_uniqueness(opts));
}
BENCHMARK(BM_UniquenessSweep)->Args({7, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
