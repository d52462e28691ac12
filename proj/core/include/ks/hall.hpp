#pragma once

#include <cstdint>
#include <vector>

#include "ks/subgroup_graph.hpp"
#include "ks/word.hpp"

namespace ks {

/// Constructive Hall step: the folded graph of H completed to a finite
/// covering without new vertices, exhibiting H as a free factor of
/// K = H ∗ Q with [F:K] = |V(H)|. The spanning tree lives inside the
/// original edges — this is what makes the basis split below witness the
/// free-factor property (⟨basis_H⟩ = H, tested rather than assumed).
struct FreeFactorization {
  SubgroupGraph graph;                   // the covering, canonical numbering
  std::vector<bool> original_slot;       // (v*rank + g): edge came from H
  SpanningTree tree;                     // restricted to original edges
  BasisEnumeration basis;                // all non-tree edges, in order
  std::vector<bool> entry_added;         // per basis entry: belongs to Q

  // K-letter view: the basis reordered with H-entries first, Q-entries
  // after, used as the free alphabet of K for Schreier rewriting.
  std::vector<std::uint32_t> enum_to_kletter;
  std::vector<std::uint32_t> kletter_to_enum;
  std::uint32_t hletter_count = 0;

  std::uint32_t index() const { return graph.vertex_count(); }
  std::uint32_t kletter_count() const { return static_cast<std::uint32_t>(basis.entries.size()); }
  const Word& kletter_word(std::uint32_t letter) const {
    return basis.entries[kletter_to_enum[letter]].word;
  }

  std::vector<Word> basis_H() const;
  std::vector<Word> basis_Q() const;

  /// Rewrites w ∈ K over the K-letters: signed (letter+1) indices.
  /// Throws NotAMember when w ∉ K.
  std::vector<std::int32_t> rewrite_kletters(const Word& w) const;
};

/// Completes a folded core graph to a covering: per generator, the i-th
/// vertex missing an outgoing edge is paired with the i-th missing an
/// incoming one, in ascending vertex order. Already-complete graphs come
/// back with an empty Q.
FreeFactorization complete(const SubgroupGraph& h);

}  // namespace ks
