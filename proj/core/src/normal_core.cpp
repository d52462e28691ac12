#include "ks/normal_core.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "graph_builder.hpp"
#include "ks/errors.hpp"

namespace ks {

namespace {

using Perm = std::vector<std::uint32_t>;

Perm identity(std::uint32_t degree) {
  Perm p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm inverse_of(const Perm& p) {
  Perm q(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

// Apply p first, then q.
Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

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

}  // namespace

std::vector<std::uint32_t> PermutationAction::permutation_of(const Word& w) const {
  Perm p = identity(degree);
  for (Letter l : w.letters()) {
    const Perm& img = generator_images[l.generator()];
    Perm step = l.positive() ? img : inverse_of(img);
    p = compose(p, step);
  }
  return p;
}

PermutationAction action_from_covering(const FreeFactorization& k) {
  if (!k.graph.covering_status().finite()) {
    throw std::invalid_argument("action requires a covering");
  }
  PermutationAction act;
  act.degree = k.graph.vertex_count();
  act.generator_images.resize(k.graph.rank());
  for (int g = 0; g < k.graph.rank(); ++g) {
    Perm& img = act.generator_images[g];
    img.resize(act.degree);
    for (std::uint32_t v = 0; v < act.degree; ++v) img[v] = k.graph.forward(v, g);
  }
  return act;
}

CoreData enumerate_image(const PermutationAction& action, std::uint32_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const int rank = static_cast<int>(action.generator_images.size());

  std::vector<Perm> steps;
  for (int g = 0; g < rank; ++g) {
    steps.push_back(action.generator_images[g]);
    steps.push_back(inverse_of(action.generator_images[g]));
  }

  CoreData core;
  core.action = action;
  std::unordered_map<Perm, std::uint32_t, PermHash> ids;
  core.elements.push_back(identity(action.degree));
  core.coset_reps.emplace_back();
  ids.emplace(core.elements[0], 0);

  for (std::size_t head = 0; head < core.elements.size(); ++head) {
    for (int g = 0; g < rank; ++g) {
      for (int sign = 0; sign < 2; ++sign) {
        Perm next = compose(core.elements[head], steps[2 * g + sign]);
        auto it = ids.find(next);
        if (it != ids.end()) continue;
        if (core.elements.size() >= cap) {
          throw CapExceeded(static_cast<std::uint64_t>(core.elements.size()) + 1);
        }
        std::uint32_t id = static_cast<std::uint32_t>(core.elements.size());
        ids.emplace(next, id);
        core.elements.push_back(std::move(next));
        Word rep = multiply(core.coset_reps[head], Word::single(Letter(g, sign == 0)));
        assert(rep.size() == core.coset_reps[head].size() + 1);
        core.coset_reps.push_back(std::move(rep));
      }
    }
  }

  // Cayley covering of G; the BFS above used the canonical exploration
  // order, so the numbering is already canonical.
  GraphBuilder builder(rank);
  for (std::size_t i = 0; i < core.elements.size(); ++i) builder.add_vertex();
  for (std::uint32_t e = 0; e < core.elements.size(); ++e) {
    for (int g = 0; g < rank; ++g) {
      std::uint32_t t = ids.at(compose(core.elements[e], steps[2 * g]));
      builder.arc(e, g, t);
    }
  }
  std::vector<std::uint32_t> renumber;
  core.core_graph = builder.build(0, &renumber);
  for (std::uint32_t v = 0; v < renumber.size(); ++v) {
    if (renumber[v] != v) throw std::logic_error("Cayley numbering is not canonical");
  }

  core.core_tree = core.core_graph.spanning_tree();
  core.basis_C = core.core_graph.basis(core.core_tree);
  return core;
}

}  // namespace ks
