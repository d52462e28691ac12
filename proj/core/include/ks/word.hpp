#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ks {

inline constexpr int kMaxRank = 26;

/// One signed generator letter of a free group of rank at most 26.
/// Printable form: 'a'..'z' for positive letters, 'A'..'Z' for inverses.
class Letter {
 public:
  Letter(int generator, bool positive)
      : code_(static_cast<std::int8_t>(positive ? generator + 1 : -(generator + 1))) {}

  int generator() const { return (code_ > 0 ? code_ : -code_) - 1; }
  bool positive() const { return code_ > 0; }
  Letter inverse() const { return Letter(static_cast<std::int8_t>(-code_)); }
  bool cancels(Letter other) const { return code_ == -other.code_; }
  char to_char() const {
    return positive() ? static_cast<char>('a' + generator()) : static_cast<char>('A' + generator());
  }

  /// Position in the fixed letter order a < A < b < B < ...; ties in shortlex
  /// comparisons are broken by this key.
  int order_key() const { return 2 * generator() + (positive() ? 0 : 1); }

  friend bool operator==(Letter, Letter) = default;

 private:
  explicit Letter(std::int8_t code) : code_(code) {}
  std::int8_t code_;
};

/// A freely reduced word; the empty word is the identity. All operations
/// return freely reduced results, so values of this type are always in
/// normal form. Instances are immutable and safe to share across threads.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence. Idempotent.
  static Word reduce(std::span<const Letter> raw);

  /// Parses the compact text form: lowercase letters are generators,
  /// uppercase their inverses, `x^k` / `x^-k` repeat a single letter, and
  /// whitespace is ignored. Throws ParseError.
  static Word parse(std::string_view text, int rank);

  static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Highest generator index used, plus one; 0 for the empty word.
  int min_rank() const;

  Word inverse() const;

  /// Compact text form, e.g. "aBAb"; the empty word prints as "".
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  friend Word multiply(const Word&, const Word&);
  std::vector<Letter> letters_;
};

/// Reduced product u·v.
Word multiply(const Word& u, const Word& v);

/// Alias for Word::inverse, for symmetry with the other operations.
inline Word invert(const Word& w) { return w.inverse(); }

/// Conjugate g^b = b⁻¹ g b. This convention is fixed across the whole
/// library: membership w ∈ S^b is equivalent to b w b⁻¹ ∈ S.
Word conjugate(const Word& g, const Word& b);

/// Commutator [u, v] = u⁻¹ v⁻¹ u v.
Word commutator(const Word& u, const Word& v);

/// Shortlex order: by length, then letter-by-letter via Letter::order_key.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace ks
