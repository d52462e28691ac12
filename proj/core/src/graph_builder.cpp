#include "graph_builder.hpp"

#include <cassert>
#include <queue>
#include <stdexcept>

namespace ks {

GraphBuilder::GraphBuilder(int rank) : rank_(rank) {}

GraphBuilder GraphBuilder::from_graph(const SubgroupGraph& g) {
  GraphBuilder b(g.rank());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) b.add_vertex();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (int gen = 0; gen < g.rank(); ++gen) {
      std::uint32_t t = g.forward(v, gen);
      if (t != kNoVertex) b.arc(v, gen, t);
    }
  }
  return b;
}

std::uint32_t GraphBuilder::add_vertex() {
  std::uint32_t id = static_cast<std::uint32_t>(parent_.size());
  parent_.push_back(id);
  fwd_.resize(fwd_.size() + rank_, kNoVertex);
  bwd_.resize(bwd_.size() + rank_, kNoVertex);
  return id;
}

std::uint32_t GraphBuilder::find(std::uint32_t v) {
  std::uint32_t root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    std::uint32_t next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

void GraphBuilder::arc(std::uint32_t u, int gen, std::uint32_t v) {
  u = find(u);
  v = find(v);
  std::uint32_t existing = fwd_[slot(u, gen)];
  if (existing != kNoVertex) {
    std::uint32_t t = find(existing);
    if (t == v) {
      ++rank_drops_;  // exact duplicate edge
    } else {
      ++rank_drops_;
      pending_.emplace_back(t, v);
    }
    return;
  }
  fwd_[slot(u, gen)] = v;
  std::uint32_t source = bwd_[slot(v, gen)];
  if (source == kNoVertex) {
    bwd_[slot(v, gen)] = u;
  } else {
    std::uint32_t s = find(source);
    if (s != u) pending_.emplace_back(s, u);
  }
}

void GraphBuilder::attach_loop(std::uint32_t at, const Word& w) {
  if (w.empty()) return;
  std::uint32_t cur = at;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    std::uint32_t next = add_vertex();
    Letter l = ls[i];
    if (l.positive()) {
      arc(cur, l.generator(), next);
    } else {
      arc(next, l.generator(), cur);
    }
    cur = next;
  }
  Letter last = ls.back();
  if (last.positive()) {
    arc(cur, last.generator(), at);
  } else {
    arc(at, last.generator(), cur);
  }
}

std::uint32_t GraphBuilder::attach_path(std::uint32_t from, const Word& w) {
  std::uint32_t cur = from;
  for (Letter l : w.letters()) {
    std::uint32_t next = add_vertex();
    if (l.positive()) {
      arc(cur, l.generator(), next);
    } else {
      arc(next, l.generator(), cur);
    }
    cur = next;
  }
  return cur;
}

void GraphBuilder::merge(std::uint32_t a, std::uint32_t b) {
  parent_[b] = a;
  for (int g = 0; g < rank_; ++g) {
    std::uint32_t tb = fwd_[slot(b, g)];
    if (tb != kNoVertex) {
      std::uint32_t ta = fwd_[slot(a, g)];
      if (ta == kNoVertex) {
        fwd_[slot(a, g)] = tb;
      } else {
        std::uint32_t fa = find(ta);
        std::uint32_t fb = find(tb);
        ++rank_drops_;
        if (fa != fb) pending_.emplace_back(fa, fb);
      }
      fwd_[slot(b, g)] = kNoVertex;
    }
    std::uint32_t sb = bwd_[slot(b, g)];
    if (sb != kNoVertex) {
      std::uint32_t sa = bwd_[slot(a, g)];
      if (sa == kNoVertex) {
        bwd_[slot(a, g)] = sb;
      } else {
        // Pointers, not edges: a vacuous pair refers to one live in-edge.
        std::uint32_t fa = find(sa);
        std::uint32_t fb = find(sb);
        if (fa != fb) pending_.emplace_back(fa, fb);
      }
      bwd_[slot(b, g)] = kNoVertex;
    }
  }
}

std::uint32_t GraphBuilder::fold() {
  std::uint32_t real_merges = 0;
  while (!pending_.empty()) {
    auto [x, y] = pending_.front();
    pending_.pop_front();
    std::uint32_t fx = find(x);
    std::uint32_t fy = find(y);
    if (fx == fy) continue;
    ++real_merges;
    merge(fx, fy);
  }
  // rank_drops_ counts discarded edges; each real merge pays one back.
  rank_drops_ -= real_merges;
  return rank_drops_;
}

void GraphBuilder::trim(std::uint32_t keep) {
  keep = find(keep);
  std::uint32_t n = static_cast<std::uint32_t>(parent_.size());
  std::vector<std::uint32_t> degree(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    for (int g = 0; g < rank_; ++g) {
      std::uint32_t t = fwd_[slot(v, g)];
      if (t != kNoVertex) {
        ++degree[v];
        ++degree[find(t)];
      }
    }
  }
  std::queue<std::uint32_t> peel;
  std::vector<bool> dead(n, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (find(v) == v && v != keep && degree[v] <= 1) peel.push(v);
  }
  while (!peel.empty()) {
    std::uint32_t v = peel.front();
    peel.pop();
    if (dead[v]) continue;
    dead[v] = true;
    for (int g = 0; g < rank_; ++g) {
      std::uint32_t t = fwd_[slot(v, g)];
      if (t != kNoVertex) {
        t = find(t);
        fwd_[slot(v, g)] = kNoVertex;
        if (bwd_[slot(t, g)] != kNoVertex && find(bwd_[slot(t, g)]) == v) {
          bwd_[slot(t, g)] = kNoVertex;
        }
        degree[v] -= (t == v) ? 2 : 1;
        if (t != v) {
          if (--degree[t] <= 1 && t != keep && !dead[t]) peel.push(t);
        }
      }
      std::uint32_t s = bwd_[slot(v, g)];
      if (s != kNoVertex) {
        s = find(s);
        bwd_[slot(v, g)] = kNoVertex;
        if (!dead[s] && fwd_[slot(s, g)] != kNoVertex && find(fwd_[slot(s, g)]) == v) {
          fwd_[slot(s, g)] = kNoVertex;
          --degree[v];
          if (--degree[s] <= 1 && s != keep && !dead[s]) peel.push(s);
        }
      }
    }
  }
  dead_ = std::move(dead);
}

SubgroupGraph GraphBuilder::build(std::uint32_t base, std::vector<std::uint32_t>* old_to_new) {
  fold();
  trim(base);
  std::uint32_t n = static_cast<std::uint32_t>(parent_.size());
  base = find(base);

  // Resolve live edges into per-representative tables.
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * rank_, kNoVertex);
  std::vector<std::uint32_t> in(static_cast<std::size_t>(n) * rank_, kNoVertex);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (find(v) != v || is_dead(v)) continue;
    for (int g = 0; g < rank_; ++g) {
      std::uint32_t t = fwd_[slot(v, g)];
      if (t == kNoVertex) continue;
      t = find(t);
      if (is_dead(t)) throw std::logic_error("edge into trimmed vertex");
      out[slot(v, g)] = t;
      if (in[slot(t, g)] != kNoVertex) throw std::logic_error("fold left a co-determinism conflict");
      in[slot(t, g)] = v;
    }
  }

  // Canonical BFS numbering from the basepoint.
  std::vector<std::uint32_t> number(n, kNoVertex);
  std::vector<std::uint32_t> order;
  number[base] = 0;
  order.push_back(base);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t v = order[head];
    for (int g = 0; g < rank_; ++g) {
      std::uint32_t t = out[slot(v, g)];
      if (t != kNoVertex && number[t] == kNoVertex) {
        number[t] = static_cast<std::uint32_t>(order.size());
        order.push_back(t);
      }
      std::uint32_t s = in[slot(v, g)];
      if (s != kNoVertex && number[s] == kNoVertex) {
        number[s] = static_cast<std::uint32_t>(order.size());
        order.push_back(s);
      }
    }
  }

  SubgroupGraph g(rank_, static_cast<std::uint32_t>(order.size()));
  for (std::uint32_t new_v = 0; new_v < order.size(); ++new_v) {
    std::uint32_t v = order[new_v];
    for (int gen = 0; gen < rank_; ++gen) {
      std::uint32_t t = out[slot(v, gen)];
      if (t == kNoVertex) continue;
      if (number[t] == kNoVertex) throw std::logic_error("graph is not connected");
      g.fwd_[g.slot(new_v, gen)] = number[t];
      g.bwd_[g.slot(number[t], gen)] = new_v;
    }
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (find(v) == v && !is_dead(v) && number[v] == kNoVertex) {
      throw std::logic_error("graph is not connected");
    }
  }

  if (old_to_new) {
    old_to_new->assign(n, kNoVertex);
    for (std::uint32_t v = 0; v < n; ++v) {
      std::uint32_t rep = find(v);
      (*old_to_new)[v] = is_dead(rep) ? kNoVertex : number[rep];
    }
  }
  return g;
}

}  // namespace ks
