#include "ks/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ks/errors.hpp"

namespace ks {

PipelineContext make_context(std::span<const Word> gens, int rank, std::uint32_t max_core) {
  PipelineContext ctx;
  ctx.rank = rank;
  for (const Word& g : gens) {
    if (!g.empty()) ctx.generators.push_back(g);
  }
  ctx.h = SubgroupGraph::from_generators(gens, rank);
  ctx.k = complete(ctx.h);
  ctx.core = enumerate_image(action_from_covering(ctx.k), max_core);
  ctx.kurosh = decompose(schreier_graph(ctx.k, ctx.core));
  return ctx;
}

bool member_of_L(const PipelineContext& ctx, const Word& w) {
  if (!ctx.in_C(w)) return false;
  return retract_is_trivial(ctx.kurosh, ctx.k, w);
}

bool member_of_N(const PipelineContext& ctx, const Word& w) {
  if (!ctx.in_C(w)) return false;
  for (const Word& b : ctx.core.coset_reps) {
    if (!member_of_L(ctx, conjugate(w, b.inverse()))) return false;
  }
  return true;
}

namespace {

// Short elements of C in shortlex order: the basis words of the core
// graph, then their pairwise products.
class FallbackCandidates {
 public:
  explicit FallbackCandidates(const CoreData& core) {
    singles_ = core.basis_C.words();
    std::sort(singles_.begin(), singles_.end(), shortlex_less);
  }

  Word at(int i) const {
    int m = static_cast<int>(singles_.size());
    if (i < m) return singles_[i];
    int p = i - m;
    if (m == 0) return Word();
    return multiply(singles_[p / m % m], singles_[p % m]);
  }

 private:
  std::vector<Word> singles_;
};

}  // namespace

WitnessCertificate build_witness(const PipelineContext& ctx, int max_attempts,
                                 std::size_t max_witness_length) {
  auto status = ctx.h.covering_status();
  if (status.finite()) throw FiniteIndex(*status.index);
  if (ctx.kurosh.j_entries.empty()) {
    throw std::logic_error("infinite-index subgroup produced an empty J");
  }

  WitnessCertificate cert;
  cert.rank = ctx.rank;
  for (const Word& g : ctx.generators) cert.input_generators.push_back(g.str());
  for (const Word& w : ctx.k.basis_H()) cert.basis_H.push_back(w.str());
  for (const Word& w : ctx.k.basis_Q()) cert.basis_Q.push_back(w.str());
  cert.index_FK = ctx.k.index();
  cert.n = ctx.core.order();
  for (const Word& b : ctx.core.coset_reps) cert.coset_reps.push_back(b.str());
  for (const Word& w : ctx.kurosh.basis_CH_words(ctx.k)) cert.basis_CH.push_back(w.str());
  for (const Word& w : ctx.kurosh.basis_J_words(ctx.k)) cert.basis_J.push_back(w.str());

  cert.construction_log.push_back("H: " + std::to_string(ctx.h.vertex_count()) +
                                  " vertices, infinite index");
  cert.construction_log.push_back("K = H*Q: index " + std::to_string(cert.index_FK) + ", |Q| = " +
                                  std::to_string(cert.basis_Q.size()));
  cert.construction_log.push_back("C: index " + std::to_string(cert.n) + ", |basis| = " +
                                  std::to_string(cert.basis_CH.size() + cert.basis_J.size()));
  cert.construction_log.push_back("split: |CH| = " + std::to_string(cert.basis_CH.size()) +
                                  ", |J| = " + std::to_string(cert.basis_J.size()));

  const Word j = ctx.kurosh.entry_fword(ctx.k, ctx.kurosh.j_entries[0]);
  cert.chosen_j = j.str();

  FallbackCandidates candidates(ctx.core);
  std::vector<Word> factors;
  Word witness = j;  // x_1 = j^ε
  factors.push_back(witness);

  const auto& reps = ctx.core.coset_reps;
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (witness.size() > max_witness_length) throw WitnessTooLarge(witness.size());
    Word x = conjugate(j, reps[i]);
    Word next = commutator(witness, x);
    int attempt = 0;
    while (next.empty() && attempt < max_attempts) {
      Word c = candidates.at(attempt);
      x = conjugate(j, multiply(c, reps[i]));
      next = commutator(witness, x);
      cert.construction_log.push_back("fallback at factor " + std::to_string(i + 1) +
                                      ": conjugator perturbed by \"" + c.str() + "\"");
      ++attempt;
    }
    if (next.empty()) throw SearchExhausted("commutator kept collapsing at factor " +
                                            std::to_string(i + 1));
    factors.push_back(x);
    witness = std::move(next);
  }
  if (witness.size() > max_witness_length) throw WitnessTooLarge(witness.size());

  for (const Word& x : factors) cert.factors_x.push_back(x.str());
  cert.witness = witness.str();
  cert.construction_log.push_back("witness: " + std::to_string(reps.size()) +
                                  " factors, length " + std::to_string(witness.size()));

  // The nesting keeps each partial inside the partial intersections by
  // normality; assert the conclusion rather than assuming it.
  if (witness.empty() || !member_of_N(ctx, witness) || ctx.in_H(witness)) {
    throw std::logic_error("constructed witness fails its defining checks");
  }
  return cert;
}

}  // namespace ks
