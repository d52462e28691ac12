#include <doctest.h>

#include "ks/errors.hpp"
#include "ks/sampling.hpp"
#include "ks/word.hpp"
#include "test_util.hpp"

using namespace ks;
using test::W;

TEST_CASE("parse: cancellation, sugar, plain words") {
  CHECK(W("aA").empty());
  CHECK(W("a^2b").str() == "aab");
  CHECK(W("abAB").size() == 4);
  CHECK(W("abAB").str() == "abAB");
  CHECK(W("a^-2").str() == "AA");
  CHECK(W("A^3").str() == "AAA");
  CHECK(W("a^0b").str() == "b");
  CHECK(W("  a b ").str() == "ab");
  CHECK(W("a ^ 2").str() == "aa");
}

TEST_CASE("parse: error classification") {
  CHECK_THROWS_AS(W("a?b"), ParseError);
  CHECK_THROWS_AS(W("c", 2), ParseError);
  CHECK_THROWS_AS(W("a^"), ParseError);
  CHECK_THROWS_AS(W("a^x"), ParseError);
  CHECK_THROWS_AS(W("^2"), ParseError);
  CHECK_THROWS_AS(W("a^2^2"), ParseError);

  auto kind_of = [](const char* text) {
    try {
      W(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    return ParseErrorKind::UnknownSymbol;
  };
  CHECK(kind_of("z?") == ParseErrorKind::GeneratorOutOfRank);
  CHECK(kind_of("?") == ParseErrorKind::UnknownSymbol);
  CHECK(kind_of("a^~") == ParseErrorKind::MalformedExponent);
  CHECK(kind_of("a^99999999") == ParseErrorKind::MalformedExponent);
}

TEST_CASE("reduce: mid-word cancellation and idempotence") {
  std::vector<Letter> raw{{0, true}, {1, true}, {1, false}, {0, false}};
  CHECK(Word::reduce(raw).empty());

  std::vector<Letter> mid{{0, true}, {1, true}, {0, false}, {0, true}};
  CHECK(Word::reduce(mid).str() == "ab");

  Word already = W("abAB");
  CHECK(Word::reduce(already.letters()) == already);
}

TEST_CASE("word algebra examples") {
  CHECK(conjugate(W("b"), Word()) == W("b"));
  CHECK(commutator(W("a"), W("a")).empty());
  CHECK(commutator(W("abA"), W("b")).str() == "aBABabAb");
  CHECK(conjugate(W("abA"), W("a")).str() == "b");
  CHECK(multiply(W("ab"), W("BA")).empty());
  CHECK(W("abA").inverse().str() == "aBA");
}

TEST_CASE("word algebra properties on random words") {
  SampleRng rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    Word u = random_reduced_word(rng, 2, rng.below(33));
    Word v = random_reduced_word(rng, 2, rng.below(33));
    Word w = random_reduced_word(rng, 2, rng.below(33));
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, u.inverse()).empty());
    CHECK(u.inverse().inverse() == u);
    CHECK(commutator(u, v).size() <= 2 * u.size() + 2 * v.size());
  }
}

TEST_CASE("reduce is idempotent on raw sequences") {
  SampleRng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    std::uint32_t len = rng.below(40);
    for (std::uint32_t i = 0; i < len; ++i) {
      raw.emplace_back(static_cast<int>(rng.below(2)), rng.below(2) == 0);
    }
    Word once = Word::reduce(raw);
    CHECK(Word::reduce(once.letters()) == once);
  }
}

TEST_CASE("parse: rank boundaries") {
  CHECK(Word::parse("z", 26).str() == "z");
  CHECK(Word::parse("Z", 26).size() == 1);
  CHECK_THROWS_AS(Word::parse("z", 25), ParseError);
  CHECK_THROWS_AS(Word::parse("a", 0), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a", 27), std::invalid_argument);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(Word(), W("a")));
  CHECK(shortlex_less(W("a"), W("A")));
  CHECK(shortlex_less(W("A"), W("b")));
  CHECK(shortlex_less(W("b"), W("B")));
  CHECK(shortlex_less(W("B"), W("aa")));
  CHECK(!shortlex_less(W("a"), W("a")));
}
