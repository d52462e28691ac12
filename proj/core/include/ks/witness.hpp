#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ks/certificate.hpp"
#include "ks/hall.hpp"
#include "ks/kurosh.hpp"
#include "ks/normal_core.hpp"
#include "ks/subgroup_graph.hpp"
#include "ks/word.hpp"

namespace ks {

/// Everything the membership procedures need: H's graph, the completed
/// covering K = H ∗ Q, the normal core C with its coset representatives,
/// and the Kurosh split of C. Immutable once built; queries are pure.
struct PipelineContext {
  int rank = 0;
  std::vector<Word> generators;  // nonempty input generators
  SubgroupGraph h;
  FreeFactorization k;
  CoreData core;
  KuroshData kurosh;

  bool in_H(const Word& w) const { return h.contains(w); }
  bool in_K(const Word& w) const { return k.graph.contains(w); }
  bool in_C(const Word& w) const { return core.in_core(w); }
};

/// Builds every stage except the witness. Throws CapExceeded when the
/// image group outgrows `max_core`; finite-index inputs are allowed here
/// (they produce an empty Q and J).
PipelineContext make_context(std::span<const Word> gens, int rank, std::uint32_t max_core);

/// Membership in L = gp_C(J): w ∈ C with trivial retraction image.
bool member_of_L(const PipelineContext& ctx, const Word& w);

/// Membership in N = ∩_i L^{b_i}: checks w^{b_i⁻¹} ∈ L for every coset
/// representative. False immediately when w ∉ C.
bool member_of_N(const PipelineContext& ctx, const Word& w);

/// Builds the witness w ∈ N as the left-normed iterated commutator of the
/// conjugates x_i = j^{b_i} of the first J-basis element, with a bounded
/// fallback perturbing the conjugators by short elements of C whenever a
/// partial commutator collapses. Throws FiniteIndex, SearchExhausted or
/// WitnessTooLarge.
WitnessCertificate build_witness(const PipelineContext& ctx, int max_attempts,
                                 std::size_t max_witness_length);

}  // namespace ks
