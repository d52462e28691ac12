#pragma once

#include <cstdint>

#include "ks/word.hpp"

namespace ks {

/// Deterministic, platform-independent PRNG (splitmix64). Used everywhere a
/// seed appears so that runs are reproducible bit-for-bit across compilers.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

 private:
  std::uint64_t state_;
};

/// Stream-splitting mix, so independent consumers get independent seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SampleRng rng(seed ^ (0xA0761D6478BD642Full * (stream + 1)));
  return rng.next();
}

/// Uniform freely reduced word of exactly the given length.
inline Word random_reduced_word(SampleRng& rng, int rank, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    while (true) {
      std::uint32_t pick = rng.below(2 * static_cast<std::uint32_t>(rank));
      Letter l(static_cast<int>(pick / 2), pick % 2 == 0);
      if (!letters.empty() && letters.back().cancels(l)) continue;
      letters.push_back(l);
      break;
    }
  }
  return Word::reduce(letters);
}

}  // namespace ks
