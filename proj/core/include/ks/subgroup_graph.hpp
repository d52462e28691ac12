#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ks/word.hpp"

namespace ks {

inline constexpr std::uint32_t kNoVertex = 0xFFFFFFFFu;

enum class SlotDirection : std::uint8_t { Out, In };

struct Deficiency {
  std::uint32_t vertex;
  int generator;
  SlotDirection direction;
  friend bool operator==(const Deficiency&, const Deficiency&) = default;
};

/// Result of the covering test: finite index (= vertex count) when every
/// vertex has a full set of edges, otherwise the list of missing slots.
struct CoveringStatus {
  std::optional<std::uint32_t> index;
  std::vector<Deficiency> deficiencies;
  bool finite() const { return index.has_value(); }
};

/// BFS spanning tree rooted at the basepoint. `parent[v]` records the tree
/// edge as seen from the parent (child = step(parent, via)); `used_slot`
/// marks the positive edges the tree uses.
struct SpanningTree {
  struct Link {
    std::uint32_t parent;
    Letter via;
  };
  std::vector<std::optional<Link>> parent;
  std::vector<bool> used_slot;
  std::uint32_t root = 0;
};

struct BasisEntry {
  std::uint32_t source;
  int generator;
  std::uint32_t target;
  Word word;
};

/// Nielsen–Schreier basis attached to a spanning tree: one entry per
/// non-tree positive edge, in the deterministic enumeration order.
struct BasisEnumeration {
  std::vector<BasisEntry> entries;
  std::vector<std::int32_t> slot_index;  // (v*rank + g) -> entry index or -1
  std::vector<Word> words() const;
};

/// Folded, connected, core, based automaton for a finitely generated
/// subgroup of a free group: the basepoint loops are exactly the subgroup
/// elements. Instances are immutable, stored in canonical BFS numbering
/// (basepoint = 0, neighbors explored generator-ascending, positive
/// direction first), so equal graphs represent equal subgroups.
class SubgroupGraph {
 public:
  static constexpr std::uint32_t kBasepoint = 0;

  /// Empty placeholder; every usable graph comes from a factory below.
  SubgroupGraph() = default;

  /// Folds the flower over the given generators and trims to the core.
  /// Empty generators are ignored; an empty list yields the trivial
  /// subgroup (a lone basepoint). The result is independent of generator
  /// order.
  static SubgroupGraph from_generators(std::span<const Word> gens, int rank);

  int rank() const { return rank_; }
  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t edge_count() const;

  std::uint32_t forward(std::uint32_t v, int gen) const { return fwd_[slot(v, gen)]; }
  std::uint32_t backward(std::uint32_t v, int gen) const { return bwd_[slot(v, gen)]; }
  std::uint32_t step(std::uint32_t v, Letter l) const {
    if (l.generator() >= rank_) return kNoVertex;
    return l.positive() ? forward(v, l.generator()) : backward(v, l.generator());
  }

  /// Endpoint of the path spelling `w` from `from`, or nullopt if the path
  /// leaves the graph.
  std::optional<std::uint32_t> trace(const Word& w, std::uint32_t from = kBasepoint) const;

  /// Membership: does `w` read a basepoint loop?
  bool contains(const Word& w) const;

  CoveringStatus covering_status() const;

  SpanningTree spanning_tree() const;

  /// Spanning tree restricted to the positive edges enabled in
  /// `slot_allowed`; those edges must already connect every vertex.
  SpanningTree spanning_tree_over(const std::vector<bool>& slot_allowed) const;

  BasisEnumeration basis(const SpanningTree& tree) const;

  /// Rewrites a basepoint loop over the Schreier basis: emits ±(index+1)
  /// for every non-tree edge the loop crosses. Throws NotAMember if the
  /// trace dies or ends away from the basepoint.
  std::vector<std::int32_t> schreier_rewrite(const SpanningTree& tree,
                                             const BasisEnumeration& basis,
                                             const Word& w) const;

  /// Automaton of the conjugate subgroup H^b = b⁻¹ H b.
  SubgroupGraph conjugated(const Word& b) const;

  /// Platform-independent serialization: rank, |V|, |E| then (source,
  /// generator, target) triples in BFS numbering, little-endian uint32.
  /// Equal strings iff the based automata are isomorphic.
  std::string canonical_form() const;

  friend bool operator==(const SubgroupGraph&, const SubgroupGraph&) = default;

 private:
  friend class GraphBuilder;
  SubgroupGraph(int rank, std::uint32_t n) : rank_(rank), vertex_count_(n) {
    fwd_.assign(static_cast<std::size_t>(n) * rank, kNoVertex);
    bwd_.assign(static_cast<std::size_t>(n) * rank, kNoVertex);
  }
  std::size_t slot(std::uint32_t v, int gen) const {
    return static_cast<std::size_t>(v) * rank_ + gen;
  }

  int rank_ = 0;
  std::uint32_t vertex_count_ = 0;
  std::vector<std::uint32_t> fwd_;
  std::vector<std::uint32_t> bwd_;
};

/// Intersection automaton: basepoint component of the product, trimmed to
/// the core. Represents the subgroup intersection.
SubgroupGraph pullback(const SubgroupGraph& g1, const SubgroupGraph& g2);

}  // namespace ks
