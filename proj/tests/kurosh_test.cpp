#include <doctest.h>

#include "ks/errors.hpp"
#include "ks/kurosh.hpp"
#include "ks/witness.hpp"
#include "test_util.hpp"

using namespace ks;
using test::W;
using test::words;

namespace {

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

PipelineContext ctx_of(std::initializer_list<const char*> gens, int rank = 2) {
  return make_context(test::words(gens), rank, 5000);
}

}  // namespace

TEST_CASE("schreier_graph: single-vertex cases and the index formula") {
  auto c1 = ctx_of({"a"});
  CHECK(c1.kurosh.graph.vertices == 1);
  CHECK(c1.kurosh.graph.letters == 2);
  CHECK(c1.kurosh.graph.hletters == 1);

  auto c2 = ctx_of({"a^2", "b"});
  CHECK(c2.kurosh.graph.vertices == 1);  // C = K here

  auto c3 = ctx_of({"a^2", "b", "abbA"});
  CHECK(c3.core.order() == 6);
  CHECK(c3.k.index() == 3);
  CHECK(c3.kurosh.graph.vertices == 2);  // order_G / index_FK
  CHECK(c3.kurosh.graph.letters == 4);
  CHECK(c3.kurosh.graph.hletters == 3);
  CHECK(c3.kurosh.graph.component_count == 1);
}

TEST_CASE("decompose: worked splits") {
  auto c1 = ctx_of({"a"});
  CHECK(strs(c1.kurosh.basis_CH_words(c1.k)) == std::vector<std::string>{"a"});
  CHECK(strs(c1.kurosh.basis_J_words(c1.k)) == std::vector<std::string>{"b"});

  auto c2 = ctx_of({"a^2", "b"});
  CHECK(strs(c2.kurosh.basis_CH_words(c2.k)) == std::vector<std::string>{"aa", "b"});
  CHECK(strs(c2.kurosh.basis_J_words(c2.k)) == std::vector<std::string>{"abA"});

  auto c0 = make_context({}, 2, 5000);
  CHECK(c0.kurosh.basis_CH_words(c0.k).empty());
  CHECK(strs(c0.kurosh.basis_J_words(c0.k)) == std::vector<std::string>{"a", "b"});

  auto c3 = ctx_of({"a^2", "b", "abbA"});
  CHECK(strs(c3.kurosh.basis_CH_words(c3.k)) ==
        std::vector<std::string>{"aa", "bb", "abbA", "baaB", "babbAB"});
  CHECK(strs(c3.kurosh.basis_J_words(c3.k)) ==
        std::vector<std::string>{"abaBAB", "babaBA"});
}

TEST_CASE("decompose: basis union regenerates C; CH part is exactly C ∩ H") {
  for (auto gens : {std::vector<const char*>{"a"}, std::vector<const char*>{"a^2", "b"},
                    std::vector<const char*>{"a^2", "b", "abbA"},
                    std::vector<const char*>{"ab"}, std::vector<const char*>{"aab"}}) {
    std::vector<Word> ws;
    for (const char* t : gens) ws.push_back(W(t));
    auto ctx = make_context(ws, 2, 5000);

    std::vector<Word> all = ctx.kurosh.basis_CH_words(ctx.k);
    auto j = ctx.kurosh.basis_J_words(ctx.k);
    all.insert(all.end(), j.begin(), j.end());
    CHECK(SubgroupGraph::from_generators(all, 2).canonical_form() ==
          ctx.core.core_graph.canonical_form());

    CHECK(SubgroupGraph::from_generators(ctx.kurosh.basis_CH_words(ctx.k), 2).canonical_form() ==
          pullback(ctx.core.core_graph, ctx.h).canonical_form());

    CHECK(!ctx.kurosh.j_entries.empty());

    // Nielsen–Schreier count for the split basis of C.
    CHECK(ctx.kurosh.entries.size() ==
          1 + static_cast<std::size_t>(ctx.core.order()) * (2 - 1));
  }
}

TEST_CASE("retract_to_CH: J letters die, CH letters are fixed") {
  auto ctx = ctx_of({"a^2", "b"});
  for (const Word& j : ctx.kurosh.basis_J_words(ctx.k)) {
    CHECK(retract_to_CH(ctx.kurosh, ctx.k, j).empty());
  }
  for (const Word& c : ctx.kurosh.basis_CH_words(ctx.k)) {
    CHECK(retract_to_CH(ctx.kurosh, ctx.k, c) == c);
  }
  CHECK(retract_to_CH(ctx.kurosh, ctx.k, W("aBABabAb")).empty());
}

TEST_CASE("retract_to_CH: rejects words outside C") {
  auto c2 = ctx_of({"a^2", "b"});
  CHECK_THROWS_AS(retract_to_CH(c2.kurosh, c2.k, W("a")), NotInC);

  // b is in K but acts nontrivially, so it misses C.
  auto c3 = ctx_of({"a^2", "b", "abbA"});
  CHECK(c3.in_K(W("b")));
  CHECK(!c3.in_C(W("b")));
  CHECK_THROWS_AS(retract_to_CH(c3.kurosh, c3.k, W("b")), NotInC);
}

TEST_CASE("retraction lands in C ∩ H and is a homomorphism on samples") {
  auto ctx = ctx_of({"a^2", "b", "abbA"});
  auto ch_graph = SubgroupGraph::from_generators(ctx.kurosh.basis_CH_words(ctx.k), 2);
  auto basis_c = ctx.core.basis_C.words();
  SampleRng rng(4321);
  auto random_c_element = [&] {
    Word w;
    int parts = 1 + static_cast<int>(rng.below(4));
    for (int p = 0; p < parts; ++p) {
      const Word& b = basis_c[rng.below(static_cast<std::uint32_t>(basis_c.size()))];
      w = multiply(w, rng.below(2) == 0 ? b : b.inverse());
    }
    return w;
  };
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_c_element();
    Word v = random_c_element();
    Word ru = retract_to_CH(ctx.kurosh, ctx.k, u);
    Word rv = retract_to_CH(ctx.kurosh, ctx.k, v);
    CHECK(ch_graph.contains(ru));
    CHECK(retract_to_CH(ctx.kurosh, ctx.k, multiply(u, v)) == multiply(ru, rv));
    CHECK(retract_is_trivial(ctx.kurosh, ctx.k, u) == ru.empty());
  }
}

TEST_CASE("L meets H trivially: sampled") {
  auto ctx = ctx_of({"a^2", "b"});
  SampleRng rng(31415);
  for (int trial = 0; trial < 200; ++trial) {
    Word h;
    int parts = 1 + static_cast<int>(rng.below(8));
    for (int p = 0; p < parts; ++p) {
      const Word& g = ctx.generators[rng.below(static_cast<std::uint32_t>(ctx.generators.size()))];
      Word next = multiply(h, rng.below(2) == 0 ? g : g.inverse());
      if (next.size() > 20) break;
      h = next;
    }
    if (h.empty() || !ctx.in_C(h)) continue;
    CHECK(!retract_to_CH(ctx.kurosh, ctx.k, h).empty());
  }
}
