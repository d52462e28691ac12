#include "ks/hall.hpp"

#include <cassert>
#include <stdexcept>

#include "graph_builder.hpp"

namespace ks {

std::vector<Word> FreeFactorization::basis_H() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < basis.entries.size(); ++i) {
    if (!entry_added[i]) out.push_back(basis.entries[i].word);
  }
  return out;
}

std::vector<Word> FreeFactorization::basis_Q() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < basis.entries.size(); ++i) {
    if (entry_added[i]) out.push_back(basis.entries[i].word);
  }
  return out;
}

std::vector<std::int32_t> FreeFactorization::rewrite_kletters(const Word& w) const {
  std::vector<std::int32_t> seq = graph.schreier_rewrite(tree, basis, w);
  for (std::int32_t& s : seq) {
    std::uint32_t letter = enum_to_kletter[std::abs(s) - 1];
    s = s > 0 ? static_cast<std::int32_t>(letter + 1) : -static_cast<std::int32_t>(letter + 1);
  }
  return seq;
}

FreeFactorization complete(const SubgroupGraph& h) {
  const int rank = h.rank();
  GraphBuilder builder = GraphBuilder::from_graph(h);
  for (int g = 0; g < rank; ++g) {
    std::vector<std::uint32_t> need_out, need_in;
    for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
      if (h.forward(v, g) == kNoVertex) need_out.push_back(v);
      if (h.backward(v, g) == kNoVertex) need_in.push_back(v);
    }
    assert(need_out.size() == need_in.size());
    for (std::size_t i = 0; i < need_out.size(); ++i) {
      builder.arc(need_out[i], g, need_in[i]);
    }
  }

  FreeFactorization ff;
  std::vector<std::uint32_t> old_to_new;
  ff.graph = builder.build(SubgroupGraph::kBasepoint, &old_to_new);
  if (ff.graph.vertex_count() != h.vertex_count()) {
    throw std::logic_error("completion changed the vertex count");
  }

  ff.original_slot.assign(static_cast<std::size_t>(ff.graph.vertex_count()) * rank, false);
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
    for (int g = 0; g < rank; ++g) {
      if (h.forward(v, g) != kNoVertex) {
        ff.original_slot[static_cast<std::size_t>(old_to_new[v]) * rank + g] = true;
      }
    }
  }

  ff.tree = ff.graph.spanning_tree_over(ff.original_slot);
  ff.basis = ff.graph.basis(ff.tree);

  ff.entry_added.resize(ff.basis.entries.size());
  for (std::size_t i = 0; i < ff.basis.entries.size(); ++i) {
    const auto& e = ff.basis.entries[i];
    ff.entry_added[i] = !ff.original_slot[static_cast<std::size_t>(e.source) * rank + e.generator];
  }

  // K-letters: H-entries first, then Q-entries, each in enumeration order.
  ff.enum_to_kletter.assign(ff.basis.entries.size(), 0);
  ff.kletter_to_enum.assign(ff.basis.entries.size(), 0);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < ff.basis.entries.size(); ++i) {
    if (!ff.entry_added[i]) {
      ff.enum_to_kletter[i] = next;
      ff.kletter_to_enum[next] = static_cast<std::uint32_t>(i);
      ++next;
    }
  }
  ff.hletter_count = next;
  for (std::size_t i = 0; i < ff.basis.entries.size(); ++i) {
    if (ff.entry_added[i]) {
      ff.enum_to_kletter[i] = next;
      ff.kletter_to_enum[next] = static_cast<std::uint32_t>(i);
      ++next;
    }
  }
  return ff;
}

}  // namespace ks
