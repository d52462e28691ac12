#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ks {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { UnknownSymbol, GeneratorOutOfRank, MalformedExponent };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
      : Error(message), kind_(kind), position_(position) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

/// A word was rewritten against a graph it does not belong to.
class NotAMember : public Error {
 public:
  using Error::Error;
};

/// A retraction was applied to a word outside the normal core C.
class NotInC : public Error {
 public:
  using Error::Error;
};

/// The input subgroup has finite index, so no disjoint nontrivial normal
/// subgroup exists and the construction cannot proceed.
class FiniteIndex : public Error {
 public:
  explicit FiniteIndex(std::uint32_t index)
      : Error("subgroup has finite index " + std::to_string(index)), index_(index) {}
  std::uint32_t index() const { return index_; }

 private:
  std::uint32_t index_;
};

/// The permutation image of F on cosets grew past the configured cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t order_seen)
      : Error("coset action image exceeds cap (saw " + std::to_string(order_seen) + " elements)"),
        order_seen_(order_seen) {}
  std::uint64_t order_seen() const { return order_seen_; }

 private:
  std::uint64_t order_seen_;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class WitnessTooLarge : public Error {
 public:
  explicit WitnessTooLarge(std::size_t length)
      : Error("witness word exceeds length cap (" + std::to_string(length) + " letters)"),
        length_(length) {}
  std::size_t length() const { return length_; }

 private:
  std::size_t length_;
};

/// Internal consistency failure while joining Schreier-graph components.
class DisconnectedJoin : public Error {
 public:
  using Error::Error;
};

class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

}  // namespace ks
