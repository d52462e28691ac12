#pragma once

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "ks/subgroup_graph.hpp"
#include "ks/word.hpp"

namespace ks {

/// Mutable labeled graph with Stallings folding. Vertices live in a
/// union-find; reads resolve through it, so edge slots may hold stale ids
/// until build() compacts the graph into canonical BFS numbering.
class GraphBuilder {
 public:
  explicit GraphBuilder(int rank);
  static GraphBuilder from_graph(const SubgroupGraph& g);

  std::uint32_t add_vertex();

  /// Adds the positive edge u --g--> v, folding on conflicts.
  void arc(std::uint32_t u, int gen, std::uint32_t v);

  /// Attaches a fresh path spelling w starting at `from`; returns its end.
  std::uint32_t attach_path(std::uint32_t from, const Word& w);

  /// Attaches a fresh loop spelling w at `at`.
  void attach_loop(std::uint32_t at, const Word& w);

  /// Processes all pending folds; returns the accumulated rank excess
  /// (#discarded edges − #vertex merges). Zero iff the edges added so far
  /// freely generate, i.e. no parallel-edge fold happened.
  std::uint32_t fold();

  /// Removes vertices with fewer than two edge-ends, keeping `keep`.
  void trim(std::uint32_t keep);

  /// fold + trim + canonical BFS renumbering from `base`. If `old_to_new`
  /// is given it receives the renumbering (kNoVertex for dropped vertices).
  SubgroupGraph build(std::uint32_t base, std::vector<std::uint32_t>* old_to_new = nullptr);

 private:
  std::uint32_t find(std::uint32_t v);
  void merge(std::uint32_t a, std::uint32_t b);
  bool is_dead(std::uint32_t v) const { return !dead_.empty() && dead_[v]; }
  std::size_t slot(std::uint32_t v, int gen) const {
    return static_cast<std::size_t>(v) * rank_ + gen;
  }

  int rank_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> fwd_, bwd_;
  std::vector<bool> dead_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
  std::uint32_t rank_drops_ = 0;
};

}  // namespace ks
