#include "ks/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "ks/errors.hpp"

namespace ks {

namespace {

// Exponents beyond this produce words too large to be useful at desk scale.
constexpr long long kMaxExponent = 1 << 20;

void append_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) append_reduced(stack, l);
  return Word(std::move(stack));
}

Word Word::parse(std::string_view text, int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("rank must be in [1, 26]");
  }
  std::vector<Letter> raw;
  bool last_was_letter = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      int g = c - 'a';
      if (g >= rank) {
        throw ParseError(ParseErrorKind::GeneratorOutOfRank, i,
                         std::string("generator '") + c + "' outside rank " + std::to_string(rank));
      }
      raw.emplace_back(g, true);
      last_was_letter = true;
      ++i;
      continue;
    }
    if (c >= 'A' && c <= 'Z') {
      int g = c - 'A';
      if (g >= rank) {
        throw ParseError(ParseErrorKind::GeneratorOutOfRank, i,
                         std::string("generator '") + c + "' outside rank " + std::to_string(rank));
      }
      raw.emplace_back(g, false);
      last_was_letter = true;
      ++i;
      continue;
    }
    if (c == '^') {
      if (!last_was_letter) {
        throw ParseError(ParseErrorKind::MalformedExponent, i, "exponent without a base letter");
      }
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      bool negative = false;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) {
        negative = text[j] == '-';
        ++j;
      }
      std::size_t digits_begin = j;
      long long k = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        k = k * 10 + (text[j] - '0');
        if (k > kMaxExponent) {
          throw ParseError(ParseErrorKind::MalformedExponent, i, "exponent out of range");
        }
        ++j;
      }
      if (j == digits_begin) {
        throw ParseError(ParseErrorKind::MalformedExponent, i, "exponent is not an integer");
      }
      Letter base = raw.back();
      raw.pop_back();
      Letter rep = negative ? base.inverse() : base;
      for (long long t = 0; t < k; ++t) raw.push_back(rep);
      last_was_letter = false;
      i = j;
      continue;
    }
    throw ParseError(ParseErrorKind::UnknownSymbol, i,
                     std::string("unexpected character '") + c + "'");
  }
  return reduce(raw);
}

int Word::min_rank() const {
  int r = 0;
  for (Letter l : letters_) r = std::max(r, l.generator() + 1);
  return r;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> stack = u.letters_;
  stack.reserve(u.size() + v.size());
  for (Letter l : v.letters()) append_reduced(stack, l);
  return Word(std::move(stack));
}

Word conjugate(const Word& g, const Word& b) {
  return multiply(multiply(b.inverse(), g), b);
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(multiply(u.inverse(), v.inverse()), u), v);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i].order_key() != lb[i].order_key()) return la[i].order_key() < lb[i].order_key();
  }
  return false;
}

}  // namespace ks
