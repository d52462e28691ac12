#include "ks/oracle.hpp"

#include <string>
#include <unordered_set>

namespace ks {

namespace {

std::vector<Word> factor_set(std::span<const Word> gens) {
  std::unordered_set<std::string> seen;
  std::vector<Word> out;
  for (const Word& g : gens) {
    if (g.empty()) continue;
    for (const Word& f : {g, g.inverse()}) {
      if (seen.insert(f.str()).second) out.push_back(f);
    }
  }
  return out;
}

OracleAnswer product_search(const std::vector<Word>& factors, const Word& w, int depth) {
  if (factors.empty()) {
    // Trivial subgroup: exclusion is decidable.
    return {w.empty() ? OracleAnswer::Kind::Yes : OracleAnswer::Kind::No, depth};
  }
  if (w.empty()) return {OracleAnswer::Kind::Yes, 0};
  std::unordered_set<std::string> seen{""};
  std::vector<Word> layer{Word()};
  for (int d = 1; d <= depth; ++d) {
    std::vector<Word> next;
    for (const Word& p : layer) {
      for (const Word& f : factors) {
        Word q = multiply(p, f);
        if (q == w) return {OracleAnswer::Kind::Yes, d};
        if (seen.insert(q.str()).second) next.push_back(std::move(q));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return {OracleAnswer::Kind::Unknown, depth};
}

}  // namespace

OracleAnswer naive_member(std::span<const Word> gens, const Word& w, int depth) {
  return product_search(factor_set(gens), w, depth);
}

std::vector<Word> product_closure(std::span<const Word> gens, int depth) {
  std::vector<Word> factors = factor_set(gens);
  std::vector<Word> out{Word()};
  std::unordered_set<std::string> seen{""};
  std::size_t layer_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const Word& f : factors) {
        Word q = multiply(out[i], f);
        if (seen.insert(q.str()).second) out.push_back(std::move(q));
      }
    }
    if (out.size() == layer_end) break;
    layer_begin = layer_end;
  }
  return out;
}

std::vector<Word> ball(int rank, int radius) {
  std::vector<Word> out{Word()};
  std::size_t layer_begin = 0;
  for (int k = 1; k <= radius; ++k) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int g = 0; g < rank; ++g) {
        for (bool positive : {true, false}) {
          Letter l(g, positive);
          const Word& p = out[i];
          if (!p.empty() && p.letters().back().cancels(l)) continue;
          out.push_back(multiply(p, Word::single(l)));
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

OracleAnswer naive_closure_member(std::span<const Word> closure_gens,
                                  std::span<const Word> conjugators, const Word& w,
                                  int product_depth) {
  std::vector<Word> conjugates;
  std::unordered_set<std::string> seen;
  for (const Word& g : factor_set(closure_gens)) {
    for (const Word& c : conjugators) {
      Word x = conjugate(g, c);
      if (!x.empty() && seen.insert(x.str()).second) conjugates.push_back(std::move(x));
    }
  }
  OracleAnswer a = product_search(conjugates, w, product_depth);
  if (a.no()) a.kind = OracleAnswer::Kind::Unknown;  // closures are one-sided
  return a;
}

}  // namespace ks
