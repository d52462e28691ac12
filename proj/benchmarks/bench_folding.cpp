#include <benchmark/benchmark.h>

#include "ks/oracle.hpp"
#include "ks/sampling.hpp"
#include "ks/subgroup_graph.hpp"
#include "ks/word.hpp"

namespace {

std::vector<ks::Word> random_gens(std::uint64_t seed, int count, std::size_t len) {
  ks::SampleRng rng(seed);
  std::vector<ks::Word> gens;
  for (int i = 0; i < count; ++i) gens.push_back(ks::random_reduced_word(rng, 2, len));
  return gens;
}

void BM_FromGenerators(benchmark::State& state) {
  auto gens = random_gens(7, static_cast<int>(state.range(0)), 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks::SubgroupGraph::from_generators(gens, 2));
  }
}
BENCHMARK(BM_FromGenerators)->Arg(2)->Arg(8)->Arg(32);

void BM_Membership(benchmark::State& state) {
  auto gens = random_gens(11, 4, 16);
  auto g = ks::SubgroupGraph::from_generators(gens, 2);
  // A genuine member keeps the trace alive for its whole length.
  ks::SampleRng rng(13);
  ks::Word w;
  while (w.size() < static_cast<std::size_t>(state.range(0))) {
    const ks::Word& f = gens[rng.below(static_cast<std::uint32_t>(gens.size()))];
    w = ks::multiply(w, rng.below(2) == 0 ? f : f.inverse());
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(&w);
    benchmark::DoNotOptimize(g.contains(w));
  }
  state.SetItemsProcessed(state.iterations() * w.size());
}
BENCHMARK(BM_Membership)->Arg(64)->Arg(4096)->Arg(65536);

void BM_Pullback(benchmark::State& state) {
  auto g1 = ks::SubgroupGraph::from_generators(random_gens(17, 3, 12), 2);
  auto g2 = ks::SubgroupGraph::from_generators(random_gens(19, 3, 12), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks::pullback(g1, g2));
  }
}
BENCHMARK(BM_Pullback);

}  // namespace
