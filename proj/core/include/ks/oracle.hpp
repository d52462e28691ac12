#pragma once

#include <span>
#include <vector>

#include "ks/word.hpp"

namespace ks {

/// Answer of a brute-force search: conclusive Yes/No, or Unknown with the
/// search depth that was exhausted. The searches below are one-sided by
/// design; No is only returned when exclusion is actually provable.
struct OracleAnswer {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  int depth_exhausted = 0;

  bool yes() const { return kind == Kind::Yes; }
  bool no() const { return kind == Kind::No; }
  bool conclusive() const { return kind != Kind::Unknown; }
};

/// Searches reduced products of at most `depth` factors from gens and their
/// inverses for `w`. Yes when found; No only for the trivial subgroup;
/// otherwise Unknown.
OracleAnswer naive_member(std::span<const Word> gens, const Word& w, int depth);

/// All distinct reduced products of at most `depth` factors from gens and
/// their inverses — the exact set naive_member searches. Batch form for
/// sweeping many membership questions against one subgroup.
std::vector<Word> product_closure(std::span<const Word> gens, int depth);

/// All freely reduced words of length at most `radius`.
/// Count: 1 + Σ_{k=1..radius} 2r(2r−1)^{k−1}.
std::vector<Word> ball(int rank, int radius);

/// Searches products of at most `product_depth` conjugates g^c
/// (g from closure_gens and inverses, c from conjugators) for `w`.
/// Yes when found, otherwise Unknown; never No.
OracleAnswer naive_closure_member(std::span<const Word> closure_gens,
                                  std::span<const Word> conjugators, const Word& w,
                                  int product_depth);

}  // namespace ks
