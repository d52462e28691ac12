#include "ks/subgroup_graph.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "graph_builder.hpp"
#include "ks/errors.hpp"

namespace ks {

namespace {

void put_u32le(std::string& out, std::uint32_t x) {
  out.push_back(static_cast<char>(x & 0xFF));
  out.push_back(static_cast<char>((x >> 8) & 0xFF));
  out.push_back(static_cast<char>((x >> 16) & 0xFF));
  out.push_back(static_cast<char>((x >> 24) & 0xFF));
}

}  // namespace

std::vector<Word> BasisEnumeration::words() const {
  std::vector<Word> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.word);
  return out;
}

SubgroupGraph SubgroupGraph::from_generators(std::span<const Word> gens, int rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank must be in [1, 26]");
  GraphBuilder b(rank);
  std::uint32_t base = b.add_vertex();
  for (const Word& w : gens) {
    if (w.min_rank() > rank) throw std::invalid_argument("generator uses letters outside rank");
    b.attach_loop(base, w);
  }
  return b.build(base);
}

std::uint32_t SubgroupGraph::edge_count() const {
  std::uint32_t n = 0;
  for (std::uint32_t t : fwd_) {
    if (t != kNoVertex) ++n;
  }
  return n;
}

std::optional<std::uint32_t> SubgroupGraph::trace(const Word& w, std::uint32_t from) const {
  std::uint32_t v = from;
  for (Letter l : w.letters()) {
    v = step(v, l);
    if (v == kNoVertex) return std::nullopt;
  }
  return v;
}

bool SubgroupGraph::contains(const Word& w) const {
  auto end = trace(w);
  return end.has_value() && *end == kBasepoint;
}

CoveringStatus SubgroupGraph::covering_status() const {
  CoveringStatus st;
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    for (int g = 0; g < rank_; ++g) {
      if (forward(v, g) == kNoVertex) st.deficiencies.push_back({v, g, SlotDirection::Out});
      if (backward(v, g) == kNoVertex) st.deficiencies.push_back({v, g, SlotDirection::In});
    }
  }
  if (st.deficiencies.empty()) st.index = vertex_count_;
  return st;
}

SpanningTree SubgroupGraph::spanning_tree() const {
  std::vector<bool> all(static_cast<std::size_t>(vertex_count_) * rank_, true);
  return spanning_tree_over(all);
}

SpanningTree SubgroupGraph::spanning_tree_over(const std::vector<bool>& slot_allowed) const {
  SpanningTree t;
  t.root = kBasepoint;
  t.parent.assign(vertex_count_, std::nullopt);
  t.used_slot.assign(static_cast<std::size_t>(vertex_count_) * rank_, false);
  std::vector<bool> seen(vertex_count_, false);
  std::vector<std::uint32_t> order{kBasepoint};
  seen[kBasepoint] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t v = order[head];
    for (int g = 0; g < rank_; ++g) {
      std::uint32_t fw = forward(v, g);
      if (fw != kNoVertex && !seen[fw] && slot_allowed[slot(v, g)]) {
        seen[fw] = true;
        t.parent[fw] = SpanningTree::Link{v, Letter(g, true)};
        t.used_slot[slot(v, g)] = true;
        order.push_back(fw);
      }
      std::uint32_t bw = backward(v, g);
      if (bw != kNoVertex && !seen[bw] && slot_allowed[slot(bw, g)]) {
        seen[bw] = true;
        t.parent[bw] = SpanningTree::Link{v, Letter(g, false)};
        t.used_slot[slot(bw, g)] = true;
        order.push_back(bw);
      }
    }
  }
  if (order.size() != vertex_count_) {
    throw std::logic_error("spanning tree does not reach every vertex");
  }
  return t;
}

BasisEnumeration SubgroupGraph::basis(const SpanningTree& tree) const {
  // Paths from the root through the tree, one word per vertex.
  std::vector<std::optional<Word>> from_root(vertex_count_);
  from_root[tree.root] = Word();
  auto root_path = [&](std::uint32_t v) -> const Word& {
    std::vector<std::uint32_t> chain;
    std::uint32_t cur = v;
    while (!from_root[cur].has_value()) {
      chain.push_back(cur);
      cur = tree.parent[cur]->parent;
    }
    while (!chain.empty()) {
      std::uint32_t c = chain.back();
      chain.pop_back();
      from_root[c] = multiply(*from_root[tree.parent[c]->parent], Word::single(tree.parent[c]->via));
    }
    return *from_root[v];
  };

  BasisEnumeration be;
  be.slot_index.assign(static_cast<std::size_t>(vertex_count_) * rank_, -1);
  std::vector<bool> enumerated(static_cast<std::size_t>(vertex_count_) * rank_, false);
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    for (int g = 0; g < rank_; ++g) {
      for (int dir = 0; dir < 2; ++dir) {
        std::uint32_t src, tgt;
        if (dir == 0) {
          tgt = forward(v, g);
          src = v;
        } else {
          src = backward(v, g);
          tgt = v;
        }
        if (src == kNoVertex || tgt == kNoVertex) continue;
        std::size_t s = slot(src, g);
        if (tree.used_slot[s] || enumerated[s]) continue;
        enumerated[s] = true;
        Word w = multiply(multiply(root_path(src), Word::single(Letter(g, true))),
                          root_path(tgt).inverse());
        assert(!w.empty());
        be.slot_index[s] = static_cast<std::int32_t>(be.entries.size());
        be.entries.push_back({src, g, tgt, std::move(w)});
      }
    }
  }
  assert(be.entries.size() == edge_count() - vertex_count_ + 1);
  return be;
}

std::vector<std::int32_t> SubgroupGraph::schreier_rewrite(const SpanningTree& tree,
                                                          const BasisEnumeration& basis,
                                                          const Word& w) const {
  std::vector<std::int32_t> out;
  std::uint32_t v = kBasepoint;
  for (Letter l : w.letters()) {
    std::uint32_t next = step(v, l);
    if (next == kNoVertex) throw NotAMember("word leaves the graph");
    std::size_t s = l.positive() ? slot(v, l.generator()) : slot(next, l.generator());
    if (!tree.used_slot[s]) {
      std::int32_t idx = basis.slot_index[s];
      assert(idx >= 0);
      out.push_back(l.positive() ? idx + 1 : -(idx + 1));
    }
    v = next;
  }
  if (v != kBasepoint) throw NotAMember("word ends away from the basepoint");
  return out;
}

SubgroupGraph SubgroupGraph::conjugated(const Word& b) const {
  GraphBuilder builder = GraphBuilder::from_graph(*this);
  std::uint32_t new_base = builder.attach_path(kBasepoint, b);
  return builder.build(new_base);
}

std::string SubgroupGraph::canonical_form() const {
  std::string out;
  put_u32le(out, static_cast<std::uint32_t>(rank_));
  put_u32le(out, vertex_count_);
  put_u32le(out, edge_count());
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    for (int g = 0; g < rank_; ++g) {
      std::uint32_t t = forward(v, g);
      if (t == kNoVertex) continue;
      put_u32le(out, v);
      put_u32le(out, static_cast<std::uint32_t>(g));
      put_u32le(out, t);
    }
  }
  return out;
}

SubgroupGraph pullback(const SubgroupGraph& g1, const SubgroupGraph& g2) {
  if (g1.rank() != g2.rank()) throw std::invalid_argument("pullback requires equal ranks");
  const int rank = g1.rank();
  auto key = [&](std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  GraphBuilder builder(rank);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
  std::uint32_t base = builder.add_vertex();
  ids.emplace(key(SubgroupGraph::kBasepoint, SubgroupGraph::kBasepoint), base);
  stack.emplace_back(SubgroupGraph::kBasepoint, SubgroupGraph::kBasepoint);

  auto lookup = [&](std::uint32_t a, std::uint32_t b) {
    auto [it, inserted] = ids.emplace(key(a, b), 0);
    if (inserted) {
      it->second = builder.add_vertex();
      stack.emplace_back(a, b);
    }
    return it->second;
  };

  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    std::uint32_t v = ids.at(key(a, b));
    for (int g = 0; g < rank; ++g) {
      std::uint32_t ta = g1.forward(a, g);
      std::uint32_t tb = g2.forward(b, g);
      if (ta != kNoVertex && tb != kNoVertex) {
        builder.arc(v, g, lookup(ta, tb));
      }
      std::uint32_t sa = g1.backward(a, g);
      std::uint32_t sb = g2.backward(b, g);
      if (sa != kNoVertex && sb != kNoVertex) {
        builder.arc(lookup(sa, sb), g, v);
      }
    }
  }
  return builder.build(base);
}

}  // namespace ks
