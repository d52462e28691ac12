#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ks/certificate.hpp"
#include "ks/verifier.hpp"
#include "ks/witness.hpp"
#include "ks/word.hpp"

namespace ks {

struct AnalyzeOptions {
  int rank = 2;
  std::uint32_t max_core = 5000;
  int max_attempts = 64;
  std::size_t max_witness_length = 1000000;
};

struct AnalyzeResult {
  WitnessCertificate certificate;
  PipelineContext context;
};

/// Full construction: folded H, completed covering K = H∗Q, normal core C
/// with transversal, Kurosh split, witness. Throws FiniteIndex when H is a
/// finite-index subgroup, plus the witness-stage errors.
AnalyzeResult analyze(std::span<const Word> gens, const AnalyzeOptions& options);

enum class CorpusOutcome {
  Verified,
  VerifyFailed,
  FiniteIndexSkip,
  CapExceededSkip,
  WitnessTooLargeSkip,
  SearchExhaustedSkip,
};

struct CorpusCase {
  std::uint64_t case_seed = 0;
  std::vector<std::string> generators;
  CorpusOutcome outcome = CorpusOutcome::FiniteIndexSkip;
  std::uint32_t n = 0;
  std::size_t witness_length = 0;
  bool nielsen_schreier_K = false;  // |basis| = 1 + index(rank−1) for K
  std::optional<VerificationReport> report;
};

struct CorpusSummary {
  std::vector<CorpusCase> cases;
  int verified = 0;
  int verify_failed = 0;
  int finite_index = 0;
  int cap_exceeded = 0;
  int witness_too_large = 0;
  int search_exhausted = 0;
  std::uint32_t max_n = 0;
  std::size_t max_witness_length = 0;
  double seconds = 0.0;

  int analyzed() const { return verified + verify_failed; }
};

struct CorpusOptions {
  AnalyzeOptions analyze;
  std::uint32_t sample_count = 200;
  std::uint32_t sample_length = 20;
  int min_generators = 1;
  int max_generators = 3;
  std::size_t max_generator_length = 6;
};

/// Runs `count` seeded random subgroups: analyze, then verify whatever
/// produced a certificate. Case i draws from derive_seed(seed, i), so the
/// table is reproducible and order-independent.
CorpusSummary run_corpus(std::uint64_t seed, int count, const CorpusOptions& options);

}  // namespace ks
