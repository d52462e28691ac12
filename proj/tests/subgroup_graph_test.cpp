#include <doctest.h>

#include <algorithm>

#include "ks/errors.hpp"
#include "ks/oracle.hpp"
#include "ks/subgroup_graph.hpp"
#include "test_util.hpp"

using namespace ks;
using test::W;
using test::words;

namespace {

std::vector<Word> basis_words(const SubgroupGraph& g) {
  return g.basis(g.spanning_tree()).words();
}

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("from_generators: flowers fold to the expected shapes") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  CHECK(ga.vertex_count() == 1);
  CHECK(ga.edge_count() == 1);
  CHECK(ga.forward(0, 0) == 0);

  auto gab = SubgroupGraph::from_generators(words({"a^2", "b"}), 2);
  CHECK(gab.vertex_count() == 2);
  CHECK(gab.forward(0, 0) == 1);
  CHECK(gab.forward(1, 0) == 0);
  CHECK(gab.forward(0, 1) == 0);
  CHECK(gab.forward(1, 1) == kNoVertex);

  // Folding identifies the two a-successors of the basepoint.
  auto gfold = SubgroupGraph::from_generators(words({"a^2", "ab"}), 2);
  CHECK(gfold.vertex_count() == 2);
  CHECK(gfold.forward(0, 0) == 1);
  CHECK(gfold.forward(1, 0) == 0);
  CHECK(gfold.forward(1, 1) == 0);
  CHECK(gfold.forward(0, 1) == kNoVertex);
}

TEST_CASE("from_generators: empty and epsilon generators") {
  auto trivial = SubgroupGraph::from_generators({}, 2);
  CHECK(trivial.vertex_count() == 1);
  CHECK(trivial.edge_count() == 0);
  CHECK(trivial.contains(Word()));
  CHECK(!trivial.contains(W("a")));

  auto with_eps = SubgroupGraph::from_generators(words({"", "a"}), 2);
  CHECK(with_eps.canonical_form() == SubgroupGraph::from_generators(words({"a"}), 2).canonical_form());
}

TEST_CASE("contains: explicit membership examples") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  CHECK(!ga.contains(W("b")));
  CHECK(ga.contains(W("a^-4")));

  auto gab = SubgroupGraph::from_generators(words({"a^2", "b"}), 2);
  CHECK(gab.contains(W("a^2ba^2")));
  CHECK(!gab.contains(W("aBABabAb")));  // trace dies at v1, which has no b-edge
  CHECK(!gab.contains(W("a")));
  CHECK(gab.contains(Word()));
}

TEST_CASE("covering_status: deficiencies listed per missing slot") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  auto st = ga.covering_status();
  CHECK(!st.finite());
  REQUIRE(st.deficiencies.size() == 2);
  CHECK(st.deficiencies[0] == Deficiency{0, 1, SlotDirection::Out});
  CHECK(st.deficiencies[1] == Deficiency{0, 1, SlotDirection::In});

  auto cover = SubgroupGraph::from_generators(words({"a^2", "b", "abA"}), 2);
  auto stc = cover.covering_status();
  REQUIRE(stc.finite());
  CHECK(*stc.index == 2);

  auto gab = SubgroupGraph::from_generators(words({"a^2", "b"}), 2);
  auto stg = gab.covering_status();
  CHECK(!stg.finite());
  REQUIRE(stg.deficiencies.size() == 2);
  CHECK(stg.deficiencies[0] == Deficiency{1, 1, SlotDirection::Out});
  CHECK(stg.deficiencies[1] == Deficiency{1, 1, SlotDirection::In});
}

TEST_CASE("spanning tree and Schreier basis") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  CHECK(strs(basis_words(ga)) == std::vector<std::string>{"a"});

  auto gab = SubgroupGraph::from_generators(words({"a^2", "b"}), 2);
  auto tree = gab.spanning_tree();
  REQUIRE(tree.parent[1].has_value());
  CHECK(tree.parent[1]->parent == 0);
  CHECK(tree.parent[1]->via == Letter(0, true));
  CHECK(strs(gab.basis(tree).words()) == std::vector<std::string>{"aa", "b"});

  auto cover = SubgroupGraph::from_generators(words({"a^2", "b", "abA"}), 2);
  CHECK(strs(basis_words(cover)) == std::vector<std::string>{"aa", "b", "abA"});
  CHECK(cover.basis(cover.spanning_tree()).entries.size() ==
        1 + cover.vertex_count() * (2 - 1));
}

TEST_CASE("basis generates the same subgroup") {
  SampleRng rng(501);
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = test::random_subgroup(rng, 2);
    auto g = SubgroupGraph::from_generators(gens, 2);
    auto regen = SubgroupGraph::from_generators(basis_words(g), 2);
    CHECK(regen.canonical_form() == g.canonical_form());
  }
}

TEST_CASE("schreier_rewrite: examples and round trip") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  auto ta = ga.spanning_tree();
  auto ba = ga.basis(ta);
  CHECK(ga.schreier_rewrite(ta, ba, W("a^3")) == std::vector<std::int32_t>{1, 1, 1});
  CHECK(ga.schreier_rewrite(ta, ba, Word()).empty());

  auto cover = SubgroupGraph::from_generators(words({"a^2", "b", "abA"}), 2);
  auto tc = cover.spanning_tree();
  auto bc = cover.basis(tc);
  CHECK(strs(bc.words()) == std::vector<std::string>{"aa", "b", "abA"});
  CHECK(cover.schreier_rewrite(tc, bc, W("aBABabAb")) ==
        std::vector<std::int32_t>{-3, -2, 3, 2});

  CHECK_THROWS_AS(cover.schreier_rewrite(tc, bc, W("c", 3)), NotAMember);
  auto gab = SubgroupGraph::from_generators(words({"a^2", "b"}), 2);
  auto tg = gab.spanning_tree();
  auto bg = gab.basis(tg);
  CHECK_THROWS_AS(gab.schreier_rewrite(tg, bg, W("a")), NotAMember);
  CHECK_THROWS_AS(gab.schreier_rewrite(tg, bg, W("bab")), NotAMember);
}

TEST_CASE("schreier_rewrite round-trips through the basis words") {
  SampleRng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = test::random_subgroup(rng, 2);
    auto g = SubgroupGraph::from_generators(gens, 2);
    auto t = g.spanning_tree();
    auto b = g.basis(t);
    // Random member: product of a few generators.
    Word m;
    for (int f = 0; f < 4; ++f) {
      const Word& gen = gens[rng.below(static_cast<std::uint32_t>(gens.size()))];
      m = multiply(m, rng.below(2) == 0 ? gen : gen.inverse());
    }
    auto seq = g.schreier_rewrite(t, b, m);
    Word expanded;
    for (std::int32_t s : seq) {
      const Word& bw = b.entries[std::abs(s) - 1].word;
      expanded = multiply(expanded, s > 0 ? bw : bw.inverse());
    }
    CHECK(expanded == m);
  }
}

TEST_CASE("pullback: identities and explicit intersections") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  auto gb = SubgroupGraph::from_generators(words({"b"}), 2);
  auto gab = SubgroupGraph::from_generators(words({"a^2", "b"}), 2);

  CHECK(pullback(ga, ga).canonical_form() == ga.canonical_form());

  auto none = pullback(ga, gb);
  CHECK(none.vertex_count() == 1);
  CHECK(none.edge_count() == 0);

  auto a2 = pullback(ga, gab);
  CHECK(a2.canonical_form() == SubgroupGraph::from_generators(words({"a^2"}), 2).canonical_form());

  // Membership agreement on the whole radius-6 ball.
  for (const Word& w : ball(2, 6)) {
    CHECK(a2.contains(w) == (ga.contains(w) && gab.contains(w)));
  }
}

TEST_CASE("pullback trims dead branches") {
  auto gab = SubgroupGraph::from_generators(words({"ab"}), 2);
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  auto meet = pullback(gab, ga);
  CHECK(meet.vertex_count() == 1);
  CHECK(meet.edge_count() == 0);
}

TEST_CASE("pullback symmetry") {
  SampleRng rng(321);
  for (int trial = 0; trial < 25; ++trial) {
    auto g1 = SubgroupGraph::from_generators(test::random_subgroup(rng, 2), 2);
    auto g2 = SubgroupGraph::from_generators(test::random_subgroup(rng, 2), 2);
    CHECK(pullback(g1, g2).canonical_form() == pullback(g2, g1).canonical_form());
  }
}

TEST_CASE("conjugated: identity, explicit conjugate, double conjugation") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  CHECK(ga.conjugated(Word()).canonical_form() == ga.canonical_form());

  auto gb = ga.conjugated(W("b"));
  CHECK(gb.contains(W("Bab")));
  CHECK(!gb.contains(W("a")));
  CHECK(gb.canonical_form() ==
        SubgroupGraph::from_generators(words({"Bab"}), 2).canonical_form());

  auto back = gb.conjugated(W("B"));
  CHECK(back.canonical_form() == ga.canonical_form());
}

TEST_CASE("canonical form is stable under generator permutation") {
  SampleRng rng(888);
  for (int trial = 0; trial < 50; ++trial) {
    auto gens = test::random_subgroup(rng, 2);
    auto direct = SubgroupGraph::from_generators(gens, 2);
    std::vector<Word> shuffled = gens;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.below(static_cast<std::uint32_t>(i))]);
    }
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(SubgroupGraph::from_generators(shuffled, 2).canonical_form() ==
          direct.canonical_form());
  }
}

TEST_CASE("canonical form layout: header then edge triples") {
  auto ga = SubgroupGraph::from_generators(words({"a"}), 2);
  std::string cf = ga.canonical_form();
  REQUIRE(cf.size() == 3 * 4 + 3 * 4);
  auto u32 = [&](std::size_t at) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(cf[at])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(cf[at + 1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(cf[at + 2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(cf[at + 3])) << 24);
  };
  CHECK(u32(0) == 2);   // rank
  CHECK(u32(4) == 1);   // vertices
  CHECK(u32(8) == 1);   // edges
  CHECK(u32(12) == 0);  // source
  CHECK(u32(16) == 0);  // generator
  CHECK(u32(20) == 0);  // target
}

TEST_CASE("membership agrees with the brute oracle wherever conclusive") {
  SampleRng rng(42);
  auto words6 = ball(2, 6);
  for (int trial = 0; trial < 50; ++trial) {
    auto gens = test::random_subgroup(rng, 2);
    auto g = SubgroupGraph::from_generators(gens, 2);
    for (const Word& w : words6) {
      OracleAnswer a = naive_member(gens, w, 3);
      if (a.yes()) CHECK(g.contains(w));
      if (a.no()) CHECK(!g.contains(w));
    }
  }
}
