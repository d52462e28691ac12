#pragma once

#include <cstdint>
#include <vector>

#include "ks/hall.hpp"
#include "ks/subgroup_graph.hpp"
#include "ks/word.hpp"

namespace ks {

/// Permutation action of F on the cosets of K, read off a finite covering:
/// coset i · x = target of the x-edge at vertex i.
struct PermutationAction {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generator_images;  // one per generator

  /// Image of a word under the action; identity for the empty word.
  std::vector<std::uint32_t> permutation_of(const Word& w) const;
};

PermutationAction action_from_covering(const FreeFactorization& k);

/// The normal core C = kernel of the action on cosets of K, realized as
/// the Cayley covering of the image group G: vertices are the elements of
/// G with their shortlex representative words, the basepoint is the
/// identity, and the coset representatives are exactly those words
/// (coset_reps[0] = ε).
struct CoreData {
  PermutationAction action;
  std::vector<std::vector<std::uint32_t>> elements;  // G in BFS/shortlex order
  std::vector<Word> coset_reps;
  SubgroupGraph core_graph;
  SpanningTree core_tree;
  BasisEnumeration basis_C;

  std::uint32_t order() const { return static_cast<std::uint32_t>(elements.size()); }
  bool in_core(const Word& w) const { return core_graph.contains(w); }
};

/// Closes the generator images into the full image group G by breadth-first
/// products, recording shortlex representatives. Throws CapExceeded when
/// |G| would pass `cap`.
CoreData enumerate_image(const PermutationAction& action, std::uint32_t cap);

}  // namespace ks
