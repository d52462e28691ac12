#include <benchmark/benchmark.h>

#include "ks/pipeline.hpp"
#include "ks/word.hpp"

namespace {

void BM_AnalyzeSmall(benchmark::State& state) {
  std::vector<ks::Word> gens{ks::Word::parse("a^2", 2), ks::Word::parse("b", 2)};
  ks::AnalyzeOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks::analyze(gens, options));
  }
}
BENCHMARK(BM_AnalyzeSmall);

void BM_AnalyzeVerifyRoundTrip(benchmark::State& state) {
  std::vector<ks::Word> gens{ks::Word::parse("a^2", 2), ks::Word::parse("b", 2),
                             ks::Word::parse("abbA", 2)};
  ks::AnalyzeOptions options;
  for (auto _ : state) {
    auto result = ks::analyze(gens, options);
    benchmark::DoNotOptimize(ks::verify(result.certificate, 50, 12, 42));
  }
}
BENCHMARK(BM_AnalyzeVerifyRoundTrip);

}  // namespace

BENCHMARK_MAIN();
