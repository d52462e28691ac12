#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ks/hall.hpp"
#include "ks/normal_core.hpp"
#include "ks/word.hpp"

namespace ks {

/// Schreier graph of C in K over the free alphabet of K (basis_H letters
/// first, then basis_Q): vertices are the elements of the image of K in G,
/// the basepoint (= identity) is vertex 0, and every vertex has exactly one
/// edge per letter.
struct SchreierGraphKC {
  std::uint32_t vertices = 0;
  std::uint32_t letters = 0;
  std::uint32_t hletters = 0;  // letters below this index label H-edges
  std::vector<std::uint32_t> fwd, bwd;
  std::vector<std::uint32_t> component;  // H-component id, base component = 0
  std::uint32_t component_count = 0;

  std::size_t slot(std::uint32_t v, std::uint32_t l) const {
    return static_cast<std::size_t>(v) * letters + l;
  }
};

SchreierGraphKC schreier_graph(const FreeFactorization& k, const CoreData& core);

/// Free basis of C adapted to the split C = (C∩H) ∗ J: entries tagged CH
/// are the Schreier generators of the base H-component (a free basis of
/// C∩H); everything else is J. The retraction onto C∩H kills the J letters.
struct KuroshData {
  SchreierGraphKC graph;

  // Global spanning tree: per-component H-trees joined by Q-edges.
  std::vector<std::uint32_t> tree_parent;  // vertex -> parent (root 0: self)
  std::vector<std::int32_t> tree_via;      // signed (letter+1), parent -> child
  std::vector<bool> tree_slot;             // per (v*letters + l)

  struct Entry {
    std::uint32_t source;
    std::uint32_t letter;
    std::uint32_t target;
    bool in_CH;
    std::vector<std::int32_t> kletter_word;  // Schreier word over K-letters
  };
  std::vector<Entry> entries;
  std::vector<std::int32_t> slot_entry;  // slot -> entry index or -1
  std::vector<std::uint32_t> ch_entries, j_entries;

  /// Rewrites a K-letter sequence (an element of K) over the C-basis.
  /// Signed (entry+1) indices. Throws NotInC if the walk ends off-base.
  std::vector<std::int32_t> rewrite_centries(std::span<const std::int32_t> kletters) const;

  /// Entry expanded to an F-word through the K-letter words.
  Word entry_fword(const FreeFactorization& k, std::uint32_t entry) const;
  std::vector<Word> basis_CH_words(const FreeFactorization& k) const;
  std::vector<Word> basis_J_words(const FreeFactorization& k) const;
};

KuroshData decompose(const SchreierGraphKC& graph);

/// Retraction C → C∩H determined by the split: CH letters map to
/// themselves, J letters to ε. Two-stage rewrite (F-word over K-letters,
/// K-letter word over the C-basis), then the letter images. Throws NotInC
/// when w ∉ C.
Word retract_to_CH(const KuroshData& kd, const FreeFactorization& k, const Word& w);

/// True iff w ∈ C and retract_to_CH(w) = ε, decided without expanding any
/// basis word (the CH letters freely generate, so the reduced CH-letter
/// sequence is empty exactly when the image is trivial).
bool retract_is_trivial(const KuroshData& kd, const FreeFactorization& k, const Word& w);

}  // namespace ks
