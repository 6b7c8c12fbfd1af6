#include <benchmark/benchmark.h>

#include "outer/factor_complex.hpp"
#include "outer/folding.hpp"
#include "outer/lipschitz.hpp"
#include "outer/whitehead.hpp"

using namespace outer;

namespace {

std::vector<MarkedMetricGraph> graphs(std::uint64_t seed, int count, int moves = 6) {
  Rng rng(seed);
  RandomGraphOptions o;
  o.automorphism_moves = moves;
  std::vector<MarkedMetricGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_marked_graph(rng, o));
  return out;
}

void BM_StretchFactor(benchmark::State& state) {
  auto gs = graphs(1, 16, static_cast<int>(state.range(0)));
  auto hs = graphs(2, 16, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stretch_factor(gs[i % 16], hs[i % 16]).lambda);
    ++i;
  }
}
BENCHMARK(BM_StretchFactor)->Arg(2)->Arg(6)->Arg(12);

void BM_OptimalMap(benchmark::State& state) {
  auto gs = graphs(3, 16);
  auto hs = graphs(4, 16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_map(gs[i % 16], hs[i % 16]).sigma());
    ++i;
  }
}
BENCHMARK(BM_OptimalMap);

void BM_StandardGeodesic(benchmark::State& state) {
  auto gs = graphs(5, 8, static_cast<int>(state.range(0)));
  auto hs = graphs(6, 8, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(standard_geodesic(gs[i % 8], hs[i % 8]).folding.size());
    ++i;
  }
}
BENCHMARK(BM_StandardGeodesic)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_IsSimple(benchmark::State& state) {
  Rng rng(7);
  std::vector<CyclicWord> words;
  while (words.size() < 32) {
    auto w = CyclicWord::of(random_word(rng, 3, static_cast<int>(state.range(0))));
    if (!w.trivial()) words.push_back(w);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_simple(3, words[i % words.size()]).simple);
    ++i;
  }
}
BENCHMARK(BM_IsSimple)->Arg(6)->Arg(12)->Arg(20);

void BM_FactorHandle(benchmark::State& state) {
  Rng rng(8);
  std::vector<std::vector<Word>> gens;
  for (int k = 0; k < 32; ++k) {
    auto phi = random_automorphism(rng, 3, static_cast<int>(state.range(0)));
    gens.push_back({phi.apply(Word::letter(1)), phi.apply(Word::letter(2))});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(FactorHandle::from_generators(3, gens[i % gens.size()]).code());
    ++i;
  }
}
BENCHMARK(BM_FactorHandle)->Arg(4)->Arg(12);

void BM_BuildBall(benchmark::State& state) {
  BallOptions o;
  o.bound = static_cast<int>(state.range(0));
  o.product_length = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_ball(3, {}, o).size());
}
BENCHMARK(BM_BuildBall)->Args({4, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

void BM_QgCheck(benchmark::State& state) {
  auto g = graphs(9, 1, 12).front();
  auto h = graphs(10, 1, 12).front();
  auto sg = standard_geodesic(g, h);
  std::vector<std::vector<FactorHandle>> seq;
  std::vector<FactorHandle> seeds;
  for (const auto& snap : sg.folding.snapshots) {
    seq.push_back(project(snap));
    seeds.insert(seeds.end(), seq.back().begin(), seq.back().end());
  }
  auto ball = build_ball(3, seeds);
  for (auto _ : state) benchmark::DoNotOptimize(check_reparam_quasigeodesic(seq, 6, ball).breakpoints.size());
  state.counters["events"] = static_cast<double>(seq.size());
}
BENCHMARK(BM_QgCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
