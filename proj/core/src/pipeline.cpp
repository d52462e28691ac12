#include "ks/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "ks/errors.hpp"
#include "ks/sampling.hpp"

namespace ks {

AnalyzeResult analyze(std::span<const Word> gens, const AnalyzeOptions& options) {
  // The finite-index guard comes first: completing a covering and
  // enumerating its core would otherwise mask the real diagnosis.
  SubgroupGraph h = SubgroupGraph::from_generators(gens, options.rank);
  auto status = h.covering_status();
  if (status.finite()) throw FiniteIndex(*status.index);

  AnalyzeResult result;
  result.context = make_context(gens, options.rank, options.max_core);
  result.certificate =
      build_witness(result.context, options.max_attempts, options.max_witness_length);
  return result;
}

CorpusSummary run_corpus(std::uint64_t seed, int count, const CorpusOptions& options) {
  CorpusSummary summary;
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < count; ++i) {
    CorpusCase c;
    c.case_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    SampleRng rng(c.case_seed);

    std::vector<Word> gens;
    int span = options.max_generators - options.min_generators + 1;
    int ngens = options.min_generators + static_cast<int>(rng.below(span));
    for (int g = 0; g < ngens; ++g) {
      std::size_t len = 1 + rng.below(static_cast<std::uint32_t>(options.max_generator_length));
      Word w = random_reduced_word(rng, options.analyze.rank, len);
      gens.push_back(w);
      c.generators.push_back(w.str());
    }

    c.nielsen_schreier_K = true;  // vacuous until a covering is built
    try {
      SubgroupGraph h = SubgroupGraph::from_generators(gens, options.analyze.rank);
      if (h.covering_status().finite()) throw FiniteIndex(*h.covering_status().index);

      PipelineContext ctx = make_context(gens, options.analyze.rank, options.analyze.max_core);
      c.nielsen_schreier_K =
          ctx.k.basis.entries.size() ==
          1 + static_cast<std::size_t>(ctx.k.index()) * (options.analyze.rank - 1);

      WitnessCertificate cert =
          build_witness(ctx, options.analyze.max_attempts, options.analyze.max_witness_length);
      c.n = cert.n;
      c.witness_length = cert.witness.size();
      std::uint64_t verify_seed = derive_seed(c.case_seed, 0x5EEDull);
      c.report = verify(cert, options.sample_count, options.sample_length, verify_seed);
      if (c.report->overall) {
        c.outcome = CorpusOutcome::Verified;
        ++summary.verified;
      } else {
        c.outcome = CorpusOutcome::VerifyFailed;
        ++summary.verify_failed;
      }
      summary.max_n = std::max(summary.max_n, c.n);
      summary.max_witness_length = std::max(summary.max_witness_length, c.witness_length);
    } catch (const FiniteIndex&) {
      c.outcome = CorpusOutcome::FiniteIndexSkip;
      ++summary.finite_index;
    } catch (const CapExceeded&) {
      c.outcome = CorpusOutcome::CapExceededSkip;
      ++summary.cap_exceeded;
    } catch (const WitnessTooLarge&) {
      c.outcome = CorpusOutcome::WitnessTooLargeSkip;
      ++summary.witness_too_large;
    } catch (const SearchExhausted&) {
      c.outcome = CorpusOutcome::SearchExhaustedSkip;
      ++summary.search_exhausted;
    }
    summary.cases.push_back(std::move(c));
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace ks
