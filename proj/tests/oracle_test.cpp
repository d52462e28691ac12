#include <doctest.h>

#include <set>
#include <string>

#include "ks/oracle.hpp"
#include "test_util.hpp"

using namespace ks;
using test::W;
using test::words;

TEST_CASE("naive_member finds explicit products") {
  auto one = words({"a"});
  CHECK(naive_member(one, W("a^3"), 3).yes());
  auto two = words({"a^2", "b"});
  CHECK(naive_member(two, W("a^2ba^2"), 3).yes());
  auto three = words({"a^2", "b", "abA"});
  CHECK(naive_member(three, W("aBABabAb"), 4).yes());
}

TEST_CASE("naive_member is conservative about exclusion") {
  auto one = words({"a"});
  OracleAnswer a = naive_member(one, W("b"), 6);
  CHECK(!a.yes());  // Unknown or No, never a false Yes

  // The trivial subgroup is the one case with decidable exclusion.
  std::vector<Word> none;
  CHECK(naive_member(none, W("b"), 2).no());
  CHECK(naive_member(none, Word(), 2).yes());
}

TEST_CASE("ball counts match the closed formula") {
  auto count = [](int rank, int radius) {
    std::size_t expect = 1;
    std::size_t layer = 1;
    for (int k = 1; k <= radius; ++k) {
      layer = k == 1 ? 2 * static_cast<std::size_t>(rank)
                     : layer * (2 * static_cast<std::size_t>(rank) - 1);
      expect += layer;
    }
    return expect;
  };
  CHECK(ball(2, 0).size() == 1);
  CHECK(ball(2, 1).size() == 5);
  CHECK(ball(2, 3).size() == 53);
  for (int rank = 1; rank <= 3; ++rank) {
    for (int radius = 0; radius <= 6 - rank; ++radius) {
      CHECK(ball(rank, radius).size() == count(rank, radius));
    }
  }
}

TEST_CASE("ball contains only distinct reduced words") {
  auto b = ball(2, 4);
  std::set<std::string> seen;
  for (const Word& w : b) {
    CHECK(Word::reduce(w.letters()) == w);
    CHECK(seen.insert(w.str()).second);
  }
}

TEST_CASE("naive_closure_member finds conjugate products") {
  auto gens_b = words({"b"});
  auto conj_ea = words({"", "a"});
  CHECK(naive_closure_member(gens_b, conj_ea, W("b"), 1).yes());

  // [q, b] = q^{-1} * q^b with q = abA.
  auto gens_q = words({"abA"});
  auto conj_eb = words({"", "b"});
  CHECK(naive_closure_member(gens_q, conj_eb, W("aBABabAb"), 2).yes());

  auto conj_e = words({""});
  OracleAnswer a = naive_closure_member(gens_b, conj_e, W("a"), 4);
  CHECK(a.kind == OracleAnswer::Kind::Unknown);
}
