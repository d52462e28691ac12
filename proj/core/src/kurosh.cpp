#include "ks/kurosh.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "ks/errors.hpp"

namespace ks {

namespace {

using Perm = std::vector<std::uint32_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

void append_signed_reduced(std::vector<std::int32_t>& stack, std::int32_t s) {
  if (!stack.empty() && stack.back() == -s) {
    stack.pop_back();
  } else {
    stack.push_back(s);
  }
}

}  // namespace

SchreierGraphKC schreier_graph(const FreeFactorization& k, const CoreData& core) {
  SchreierGraphKC sg;
  sg.letters = k.kletter_count();
  sg.hletters = k.hletter_count;

  std::vector<Perm> letter_perms;
  std::vector<Perm> letter_perms_inv;
  letter_perms.reserve(sg.letters);
  for (std::uint32_t l = 0; l < sg.letters; ++l) {
    letter_perms.push_back(core.action.permutation_of(k.kletter_word(l)));
    Perm inv(letter_perms.back().size());
    for (std::uint32_t i = 0; i < inv.size(); ++i) inv[letter_perms.back()[i]] = i;
    letter_perms_inv.push_back(std::move(inv));
  }

  // BFS over the image of K in G from the identity, letters ascending
  // (H first by construction), positive direction first.
  std::unordered_map<Perm, std::uint32_t, PermHash> ids;
  std::vector<Perm> elems;
  Perm id(core.action.degree);
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  ids.emplace(id, 0);
  elems.push_back(std::move(id));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::uint32_t l = 0; l < sg.letters; ++l) {
      for (int sign = 0; sign < 2; ++sign) {
        const Perm& step = sign == 0 ? letter_perms[l] : letter_perms_inv[l];
        Perm next(elems[head].size());
        for (std::uint32_t i = 0; i < next.size(); ++i) next[i] = step[elems[head][i]];
        if (ids.emplace(next, static_cast<std::uint32_t>(elems.size())).second) {
          elems.push_back(std::move(next));
        }
      }
    }
  }

  sg.vertices = static_cast<std::uint32_t>(elems.size());
  sg.fwd.assign(static_cast<std::size_t>(sg.vertices) * sg.letters, kNoVertex);
  sg.bwd.assign(static_cast<std::size_t>(sg.vertices) * sg.letters, kNoVertex);
  for (std::uint32_t v = 0; v < sg.vertices; ++v) {
    for (std::uint32_t l = 0; l < sg.letters; ++l) {
      Perm next(elems[v].size());
      for (std::uint32_t i = 0; i < next.size(); ++i) next[i] = letter_perms[l][elems[v][i]];
      std::uint32_t t = ids.at(next);
      sg.fwd[sg.slot(v, l)] = t;
      sg.bwd[sg.slot(t, l)] = v;
    }
  }

  // H-components, discovered in ascending vertex order.
  sg.component.assign(sg.vertices, kNoVertex);
  for (std::uint32_t v = 0; v < sg.vertices; ++v) {
    if (sg.component[v] != kNoVertex) continue;
    std::uint32_t comp = sg.component_count++;
    std::vector<std::uint32_t> stack{v};
    sg.component[v] = comp;
    while (!stack.empty()) {
      std::uint32_t u = stack.back();
      stack.pop_back();
      for (std::uint32_t l = 0; l < sg.hletters; ++l) {
        for (std::uint32_t t : {sg.fwd[sg.slot(u, l)], sg.bwd[sg.slot(u, l)]}) {
          if (sg.component[t] == kNoVertex) {
            sg.component[t] = comp;
            stack.push_back(t);
          }
        }
      }
    }
  }
  return sg;
}

KuroshData decompose(const SchreierGraphKC& graph) {
  KuroshData kd;
  kd.graph = graph;
  const SchreierGraphKC& sg = kd.graph;
  kd.tree_parent.assign(sg.vertices, kNoVertex);
  kd.tree_via.assign(sg.vertices, 0);
  kd.tree_slot.assign(static_cast<std::size_t>(sg.vertices) * sg.letters, false);

  std::vector<bool> vertex_joined(sg.vertices, false);
  std::vector<bool> component_joined(sg.component_count, false);

  // H-BFS tree of one component from its entry vertex.
  auto grow_component_tree = [&](std::uint32_t entry) {
    std::vector<std::uint32_t> order{entry};
    vertex_joined[entry] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::uint32_t v = order[head];
      for (std::uint32_t l = 0; l < sg.hletters; ++l) {
        std::uint32_t t = sg.fwd[sg.slot(v, l)];
        if (!vertex_joined[t]) {
          vertex_joined[t] = true;
          kd.tree_parent[t] = v;
          kd.tree_via[t] = static_cast<std::int32_t>(l + 1);
          kd.tree_slot[sg.slot(v, l)] = true;
          order.push_back(t);
        }
        std::uint32_t s = sg.bwd[sg.slot(v, l)];
        if (!vertex_joined[s]) {
          vertex_joined[s] = true;
          kd.tree_parent[s] = v;
          kd.tree_via[s] = -static_cast<std::int32_t>(l + 1);
          kd.tree_slot[sg.slot(s, l)] = true;
          order.push_back(s);
        }
      }
    }
  };

  kd.tree_parent[0] = 0;
  component_joined[sg.component[0]] = true;
  grow_component_tree(0);

  // Join the remaining H-components along Q-edges, breadth-first over
  // components, scanning joined vertices in ascending order.
  std::vector<std::uint32_t> comp_queue{sg.component[0]};
  for (std::size_t head = 0; head < comp_queue.size(); ++head) {
    std::uint32_t comp = comp_queue[head];
    for (std::uint32_t v = 0; v < sg.vertices; ++v) {
      if (sg.component[v] != comp) continue;
      for (std::uint32_t l = sg.hletters; l < sg.letters; ++l) {
        std::uint32_t t = sg.fwd[sg.slot(v, l)];
        if (!component_joined[sg.component[t]]) {
          component_joined[sg.component[t]] = true;
          kd.tree_parent[t] = v;
          kd.tree_via[t] = static_cast<std::int32_t>(l + 1);
          kd.tree_slot[sg.slot(v, l)] = true;
          grow_component_tree(t);
          comp_queue.push_back(sg.component[t]);
        }
        std::uint32_t s = sg.bwd[sg.slot(v, l)];
        if (!component_joined[sg.component[s]]) {
          component_joined[sg.component[s]] = true;
          kd.tree_parent[s] = v;
          kd.tree_via[s] = -static_cast<std::int32_t>(l + 1);
          kd.tree_slot[sg.slot(s, l)] = true;
          grow_component_tree(s);
          comp_queue.push_back(sg.component[s]);
        }
      }
    }
  }
  for (bool joined : vertex_joined) {
    if (!joined) throw DisconnectedJoin("Schreier graph components did not join");
  }

  // Root paths through the global tree, as K-letter sequences.
  std::vector<std::vector<std::int32_t>> from_root(sg.vertices);
  std::vector<bool> have_path(sg.vertices, false);
  have_path[0] = true;
  auto root_path = [&](std::uint32_t v) -> const std::vector<std::int32_t>& {
    std::vector<std::uint32_t> chain;
    std::uint32_t cur = v;
    while (!have_path[cur]) {
      chain.push_back(cur);
      cur = kd.tree_parent[cur];
    }
    while (!chain.empty()) {
      std::uint32_t c = chain.back();
      chain.pop_back();
      from_root[c] = from_root[kd.tree_parent[c]];
      from_root[c].push_back(kd.tree_via[c]);
      have_path[c] = true;
    }
    return from_root[v];
  };

  kd.slot_entry.assign(static_cast<std::size_t>(sg.vertices) * sg.letters, -1);
  std::vector<bool> enumerated(static_cast<std::size_t>(sg.vertices) * sg.letters, false);
  for (std::uint32_t v = 0; v < sg.vertices; ++v) {
    for (std::uint32_t l = 0; l < sg.letters; ++l) {
      for (int dir = 0; dir < 2; ++dir) {
        std::uint32_t src = dir == 0 ? v : sg.bwd[sg.slot(v, l)];
        std::uint32_t tgt = dir == 0 ? sg.fwd[sg.slot(v, l)] : v;
        std::size_t s = sg.slot(src, l);
        if (kd.tree_slot[s] || enumerated[s]) continue;
        enumerated[s] = true;

        KuroshData::Entry entry;
        entry.source = src;
        entry.letter = l;
        entry.target = tgt;
        entry.in_CH = l < sg.hletters && sg.component[src] == 0;

        std::vector<std::int32_t> word = root_path(src);
        word.push_back(static_cast<std::int32_t>(l + 1));
        const auto& back = root_path(tgt);
        for (auto it = back.rbegin(); it != back.rend(); ++it) word.push_back(-*it);
        entry.kletter_word = std::move(word);

        std::int32_t idx = static_cast<std::int32_t>(kd.entries.size());
        kd.slot_entry[s] = idx;
        (entry.in_CH ? kd.ch_entries : kd.j_entries).push_back(static_cast<std::uint32_t>(idx));
        kd.entries.push_back(std::move(entry));
      }
    }
  }
  return kd;
}

std::vector<std::int32_t> KuroshData::rewrite_centries(
    std::span<const std::int32_t> kletters) const {
  const SchreierGraphKC& sg = graph;
  std::vector<std::int32_t> out;
  std::uint32_t v = 0;
  for (std::int32_t s : kletters) {
    std::uint32_t l = static_cast<std::uint32_t>(std::abs(s)) - 1;
    std::uint32_t next;
    std::size_t edge_slot;
    if (s > 0) {
      next = sg.fwd[sg.slot(v, l)];
      edge_slot = sg.slot(v, l);
    } else {
      next = sg.bwd[sg.slot(v, l)];
      edge_slot = sg.slot(next, l);
    }
    if (!tree_slot[edge_slot]) {
      std::int32_t idx = slot_entry[edge_slot];
      assert(idx >= 0);
      out.push_back(s > 0 ? idx + 1 : -(idx + 1));
    }
    v = next;
  }
  if (v != 0) throw NotInC("word lies in K but not in C");
  return out;
}

Word KuroshData::entry_fword(const FreeFactorization& k, std::uint32_t entry) const {
  Word w;
  for (std::int32_t s : entries[entry].kletter_word) {
    const Word& letter = k.kletter_word(static_cast<std::uint32_t>(std::abs(s)) - 1);
    w = multiply(w, s > 0 ? letter : letter.inverse());
  }
  return w;
}

std::vector<Word> KuroshData::basis_CH_words(const FreeFactorization& k) const {
  std::vector<Word> out;
  out.reserve(ch_entries.size());
  for (std::uint32_t e : ch_entries) out.push_back(entry_fword(k, e));
  return out;
}

std::vector<Word> KuroshData::basis_J_words(const FreeFactorization& k) const {
  std::vector<Word> out;
  out.reserve(j_entries.size());
  for (std::uint32_t e : j_entries) out.push_back(entry_fword(k, e));
  return out;
}

Word retract_to_CH(const KuroshData& kd, const FreeFactorization& k, const Word& w) {
  std::vector<std::int32_t> kletters;
  try {
    kletters = k.rewrite_kletters(w);
  } catch (const NotAMember&) {
    throw NotInC("word is not in K");
  }
  std::vector<std::int32_t> centries = kd.rewrite_centries(kletters);

  Word out;
  for (std::int32_t s : centries) {
    std::uint32_t e = static_cast<std::uint32_t>(std::abs(s)) - 1;
    if (!kd.entries[e].in_CH) continue;
    Word f = kd.entry_fword(k, e);
    out = multiply(out, s > 0 ? f : f.inverse());
  }
  return out;
}

bool retract_is_trivial(const KuroshData& kd, const FreeFactorization& k, const Word& w) {
  std::vector<std::int32_t> kletters;
  try {
    kletters = k.rewrite_kletters(w);
  } catch (const NotAMember&) {
    return false;
  }
  std::vector<std::int32_t> centries;
  try {
    centries = kd.rewrite_centries(kletters);
  } catch (const NotInC&) {
    return false;
  }
  std::vector<std::int32_t> stack;
  for (std::int32_t s : centries) {
    std::uint32_t e = static_cast<std::uint32_t>(std::abs(s)) - 1;
    if (!kd.entries[e].in_CH) continue;
    append_signed_reduced(stack, s);
  }
  return stack.empty();
}

}  // namespace ks
