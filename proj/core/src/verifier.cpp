#include "ks/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "ks/errors.hpp"
#include "ks/sampling.hpp"
#include "ks/subgroup_graph.hpp"
#include "ks/word.hpp"

namespace ks {

const CheckResult& VerificationReport::check(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no such check: " + id);
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"id", c.id},
                           {"description", c.description},
                           {"pass", c.pass},
                           {"details", c.details}});
  }
  j["overall"] = report.overall;
  return j.dump(2) + "\n";
}

namespace {

using YWord = std::vector<std::int32_t>;  // signed (basis index + 1), reduced

void yappend(YWord& out, std::int32_t s) {
  if (!out.empty() && out.back() == -s) {
    out.pop_back();
  } else {
    out.push_back(s);
  }
}

void yconcat(YWord& out, const YWord& tail) {
  for (std::int32_t s : tail) yappend(out, s);
}

void yconcat_inv(YWord& out, const YWord& tail) {
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) yappend(out, -*it);
}

/// Stallings folding that keeps, for every edge, its provenance over the
/// input alphabet: a weighted union-find carries the transport words, so
/// that after folding any basepoint loop can be rewritten over the input
/// words themselves. Rejects inputs that are not a free basis (any
/// parallel-edge fold drops the graph rank below the word count).
class BasisRewriter {
 public:
  BasisRewriter(const std::vector<Word>& words, int rank, const std::vector<bool>& kill);

  /// False when the nonempty input words are not a free basis.
  bool valid() const { return valid_; }

  /// w ∈ subgroup and the image under (kept letters ↦ themselves, killed
  /// letters ↦ ε) is trivial. Requires valid().
  bool maps_to_identity(const Word& w) const;

 private:
  struct Edge {
    std::uint32_t u, v;
    int gen;
    YWord val;
  };

  std::uint32_t find(std::uint32_t v);
  const YWord& potential(std::uint32_t v);  // valid right after find(v)
  YWord class_value(const Edge& e);
  void enqueue(std::int32_t kept, std::int32_t other) { pending_.push_back({kept, other}); }
  void insert(std::int32_t eid);
  void process();
  void merge_roots(std::uint32_t keep, std::uint32_t absorb, YWord transport);
  std::size_t slot(std::uint32_t v, int gen) const {
    return static_cast<std::size_t>(v) * rank_ + gen;
  }

  int rank_;
  bool valid_ = true;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> parent_;
  std::vector<YWord> rel_;  // potential relative to parent
  std::vector<std::int32_t> fwd_, bwd_;  // root slot tables: edge id + 1, or 0
  std::deque<std::pair<std::int32_t, std::int32_t>> pending_;
  std::size_t nonempty_words_ = 0;

  // Compacted rewriter, built once folding succeeded.
  std::vector<std::uint32_t> cfwd_, cbwd_;
  std::vector<const YWord*> cfwd_val_;
  std::vector<YWord> out_val_;
  std::vector<bool> kill_letter_;
  std::uint32_t cbase_ = 0;
  std::uint32_t cvertices_ = 0;
  std::size_t cslot(std::uint32_t v, int gen) const {
    return static_cast<std::size_t>(v) * rank_ + gen;
  }
};

BasisRewriter::BasisRewriter(const std::vector<Word>& words, int rank,
                             const std::vector<bool>& kill)
    : rank_(rank) {
  auto add_vertex = [&]() {
    std::uint32_t id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(id);
    rel_.emplace_back();
    fwd_.resize(fwd_.size() + rank_, 0);
    bwd_.resize(bwd_.size() + rank_, 0);
    return id;
  };
  std::uint32_t base = add_vertex();

  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    if (w.empty()) continue;  // degenerate entries contribute nothing
    ++nonempty_words_;
    std::int32_t letter = static_cast<std::int32_t>(i) + 1;
    std::uint32_t cur = base;
    const auto& ls = w.letters();
    for (std::size_t p = 0; p < ls.size(); ++p) {
      std::uint32_t next = p + 1 == ls.size() ? base : add_vertex();
      Letter l = ls[p];
      YWord val;
      if (p + 1 == ls.size()) val.push_back(l.positive() ? letter : -letter);
      Edge e = l.positive() ? Edge{cur, next, l.generator(), std::move(val)}
                            : Edge{next, cur, l.generator(), std::move(val)};
      edges_.push_back(std::move(e));
      insert(static_cast<std::int32_t>(edges_.size()) - 1);
      process();
      if (!valid_) return;
      cur = next;
    }
  }
  process();
  if (!valid_) return;

  // Compact live classes; count the rank to confirm a free basis.
  std::unordered_map<std::uint32_t, std::uint32_t> ids;
  std::vector<std::uint32_t> roots;
  std::size_t live_edges = 0;
  for (std::uint32_t v = 0; v < parent_.size(); ++v) {
    if (find(v) != v) continue;
    ids.emplace(v, static_cast<std::uint32_t>(roots.size()));
    roots.push_back(v);
    for (int g = 0; g < rank_; ++g) {
      if (fwd_[slot(v, g)] != 0) ++live_edges;
    }
  }
  if (live_edges + 1 != roots.size() + nonempty_words_) {
    valid_ = false;  // graph rank dropped below the word count
    return;
  }

  cvertices_ = static_cast<std::uint32_t>(roots.size());
  cbase_ = ids.at(find(base));
  cfwd_.assign(static_cast<std::size_t>(cvertices_) * rank_, kNoVertex);
  cbwd_.assign(static_cast<std::size_t>(cvertices_) * rank_, kNoVertex);
  std::vector<std::int32_t> edge_of_slot(static_cast<std::size_t>(cvertices_) * rank_, 0);
  for (std::uint32_t r = 0; r < cvertices_; ++r) {
    std::uint32_t root = roots[r];
    for (int g = 0; g < rank_; ++g) {
      std::int32_t eid = fwd_[slot(root, g)];
      if (eid == 0) continue;
      const Edge& e = edges_[eid - 1];
      std::uint32_t t = ids.at(find(e.v));
      cfwd_[cslot(r, g)] = t;
      cbwd_[cslot(t, g)] = r;
      edge_of_slot[cslot(r, g)] = eid;
    }
  }

  // Gauge every value against a spanning tree so tree edges vanish; the
  // base potential undoes the transport the basepoint itself picked up.
  find(base);
  std::vector<std::optional<YWord>> pot(cvertices_);
  YWord base_pot;
  yconcat_inv(base_pot, potential(base));
  pot[cbase_] = std::move(base_pot);
  std::vector<std::uint32_t> order{cbase_};
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t v = order[head];
    for (int g = 0; g < rank_; ++g) {
      std::uint32_t t = cfwd_[cslot(v, g)];
      if (t != kNoVertex && !pot[t].has_value()) {
        YWord p = *pot[v];
        yconcat(p, class_value(edges_[edge_of_slot[cslot(v, g)] - 1]));
        pot[t] = std::move(p);
        order.push_back(t);
      }
      std::uint32_t s = cbwd_[cslot(v, g)];
      if (s != kNoVertex && !pot[s].has_value()) {
        YWord p = *pot[v];
        yconcat_inv(p, class_value(edges_[edge_of_slot[cslot(s, g)] - 1]));
        pot[s] = std::move(p);
        order.push_back(s);
      }
    }
  }

  out_val_.assign(static_cast<std::size_t>(cvertices_) * rank_, YWord{});
  for (std::uint32_t v = 0; v < cvertices_; ++v) {
    for (int g = 0; g < rank_; ++g) {
      std::int32_t eid = edge_of_slot[cslot(v, g)];
      if (eid == 0) continue;
      YWord val = *pot[v];
      yconcat(val, class_value(edges_[eid - 1]));
      yconcat_inv(val, *pot[cfwd_[cslot(v, g)]]);
      out_val_[cslot(v, g)] = std::move(val);
    }
  }

  kill_letter_.assign(words.size() + 1, false);
  for (std::size_t i = 0; i < words.size(); ++i) kill_letter_[i + 1] = kill[i];
}

std::uint32_t BasisRewriter::find(std::uint32_t v) {
  std::vector<std::uint32_t> chain;
  std::uint32_t root = v;
  while (parent_[root] != root) {
    chain.push_back(root);
    root = parent_[root];
  }
  // Compress top-down so every rel becomes root-relative exactly once.
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (parent_[*it] == root) continue;
    YWord r = rel_[parent_[*it]];
    yconcat(r, rel_[*it]);
    rel_[*it] = std::move(r);
    parent_[*it] = root;
  }
  return root;
}

const YWord& BasisRewriter::potential(std::uint32_t v) { return rel_[v]; }

YWord BasisRewriter::class_value(const Edge& e) {
  find(e.u);
  find(e.v);
  YWord out = rel_[e.u];
  yconcat(out, e.val);
  yconcat_inv(out, rel_[e.v]);
  return out;
}

void BasisRewriter::insert(std::int32_t eid) {
  const Edge& e = edges_[eid];
  std::uint32_t u = find(e.u);
  std::uint32_t v = find(e.v);
  std::int32_t kept = fwd_[slot(u, e.gen)];
  if (kept != 0) {
    enqueue(kept, eid + 1);
    return;
  }
  fwd_[slot(u, e.gen)] = eid + 1;
  std::int32_t in_edge = bwd_[slot(v, e.gen)];
  if (in_edge == 0) {
    bwd_[slot(v, e.gen)] = eid + 1;
  } else {
    enqueue(-in_edge, -(eid + 1));
  }
}

void BasisRewriter::process() {
  while (!pending_.empty() && valid_) {
    auto [kept_ref, other_ref] = pending_.front();
    pending_.pop_front();
    bool forward = kept_ref > 0;  // positive: same source; negative: same target
    const Edge& e1 = edges_[std::abs(kept_ref) - 1];
    const Edge& e2 = edges_[std::abs(other_ref) - 1];
    std::uint32_t t1 = forward ? find(e1.v) : find(e1.u);
    std::uint32_t t2 = forward ? find(e2.v) : find(e2.u);
    if (t1 == t2) {
      // Equal transports mean the pair was reconciled through another
      // fold; a mismatch is a genuine parallel fold, i.e. a rank drop.
      if (forward && class_value(e1) != class_value(e2)) valid_ = false;
      continue;
    }
    YWord v1 = class_value(e1);
    YWord v2 = class_value(e2);
    YWord transport;
    if (forward) {
      yconcat_inv(transport, v1);
      yconcat(transport, v2);
    } else {
      yconcat(transport, v1);
      yconcat_inv(transport, v2);
    }
    merge_roots(t1, t2, std::move(transport));
  }
}

void BasisRewriter::merge_roots(std::uint32_t keep, std::uint32_t absorb, YWord transport) {
  parent_[absorb] = keep;
  rel_[absorb] = std::move(transport);
  for (int g = 0; g < rank_; ++g) {
    std::int32_t eid = fwd_[slot(absorb, g)];
    if (eid != 0) {
      fwd_[slot(absorb, g)] = 0;
      std::int32_t kept = fwd_[slot(keep, g)];
      if (kept == 0) {
        fwd_[slot(keep, g)] = eid;
      } else {
        enqueue(kept, eid);
      }
    }
    std::int32_t bid = bwd_[slot(absorb, g)];
    if (bid != 0) {
      bwd_[slot(absorb, g)] = 0;
      std::int32_t kept = bwd_[slot(keep, g)];
      if (kept == 0) {
        bwd_[slot(keep, g)] = bid;
      } else {
        enqueue(-kept, -bid);
      }
    }
  }
}

bool BasisRewriter::maps_to_identity(const Word& w) const {
  std::uint32_t v = cbase_;
  YWord image;
  for (Letter l : w.letters()) {
    int g = l.generator();
    if (l.positive()) {
      std::uint32_t t = cfwd_[cslot(v, g)];
      if (t == kNoVertex) return false;
      for (std::int32_t s : out_val_[cslot(v, g)]) {
        if (!kill_letter_[std::abs(s)]) yappend(image, s);
      }
      v = t;
    } else {
      std::uint32_t s = cbwd_[cslot(v, g)];
      if (s == kNoVertex) return false;
      const YWord& val = out_val_[cslot(s, g)];
      for (auto it = val.rbegin(); it != val.rend(); ++it) {
        if (!kill_letter_[std::abs(*it)]) yappend(image, -*it);
      }
      v = s;
    }
  }
  return v == cbase_ && image.empty();
}

struct Rebuilt {
  int rank = 0;
  std::vector<Word> gens, basis_H, basis_Q, basis_CH, basis_J, reps, factors;
  Word witness, chosen_j;
  SubgroupGraph h, h_from_basis, k, c;
  std::vector<Word> kill_words;   // CH then J
  std::vector<bool> kill_flags;   // false for CH, true for J
};

Rebuilt rebuild(const WitnessCertificate& cert) {
  auto parse_list = [&](const std::vector<std::string>& texts, const char* what) {
    std::vector<Word> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) {
      try {
        out.push_back(Word::parse(t, cert.rank));
      } catch (const ParseError& e) {
        throw MalformedCertificate(std::string("unreadable word in ") + what + ": " + e.what());
      }
    }
    return out;
  };

  Rebuilt r;
  r.rank = cert.rank;
  r.gens = parse_list(cert.input_generators, "input_generators");
  r.basis_H = parse_list(cert.basis_H, "basis_H");
  r.basis_Q = parse_list(cert.basis_Q, "basis_Q");
  r.basis_CH = parse_list(cert.basis_CH, "basis_CH");
  r.basis_J = parse_list(cert.basis_J, "basis_J");
  r.reps = parse_list(cert.coset_reps, "coset_reps");
  r.factors = parse_list(cert.factors_x, "factors_x");
  try {
    r.witness = Word::parse(cert.witness, cert.rank);
    r.chosen_j = Word::parse(cert.chosen_j, cert.rank);
  } catch (const ParseError& e) {
    throw MalformedCertificate(std::string("unreadable witness fields: ") + e.what());
  }

  r.h = SubgroupGraph::from_generators(r.gens, cert.rank);
  r.h_from_basis = SubgroupGraph::from_generators(r.basis_H, cert.rank);
  std::vector<Word> k_gens = r.basis_H;
  k_gens.insert(k_gens.end(), r.basis_Q.begin(), r.basis_Q.end());
  r.k = SubgroupGraph::from_generators(k_gens, cert.rank);
  r.kill_words = r.basis_CH;
  r.kill_words.insert(r.kill_words.end(), r.basis_J.begin(), r.basis_J.end());
  r.kill_flags.assign(r.basis_CH.size(), false);
  r.kill_flags.resize(r.kill_words.size(), true);
  r.c = SubgroupGraph::from_generators(r.kill_words, cert.rank);
  return r;
}

}  // namespace

VerificationReport verify(const WitnessCertificate& cert, std::uint32_t sample_count,
                          std::uint32_t sample_length, std::uint64_t seed) {
  Rebuilt r = rebuild(cert);
  VerificationReport report;
  auto add = [&](const char* id, const char* description, bool pass, std::string details) {
    report.checks.push_back({id, description, pass, std::move(details)});
  };

  // C1: the recorded basis_H generates exactly the input subgroup.
  {
    std::string details;
    bool pass = true;
    for (const Word& g : r.gens) {
      if (!r.h_from_basis.contains(g)) {
        pass = false;
        details = "input generator \"" + g.str() + "\" not in <basis_H>";
        break;
      }
    }
    for (const Word& b : r.basis_H) {
      if (!pass) break;
      if (!r.h.contains(b)) {
        pass = false;
        details = "basis_H word \"" + b.str() + "\" not in H";
        break;
      }
    }
    add("C1", "basis_H and input_generators generate the same subgroup", pass, details);
  }

  // C2: K is a covering of the stated index with a basis of the right size.
  {
    auto st = r.k.covering_status();
    bool pass = st.finite() && *st.index == cert.index_FK;
    std::string details;
    if (!st.finite()) {
      details = "K is not a covering";
    } else if (*st.index != cert.index_FK) {
      details = "index " + std::to_string(*st.index) + " != " + std::to_string(cert.index_FK);
    }
    std::size_t expect = 1 + static_cast<std::size_t>(cert.index_FK) * (cert.rank - 1);
    if (pass && r.basis_H.size() + r.basis_Q.size() != expect) {
      pass = false;
      details = "|basis_H| + |basis_Q| = " + std::to_string(r.basis_H.size() + r.basis_Q.size()) +
                ", expected " + std::to_string(expect);
    }
    add("C2", "K = <basis_H ∪ basis_Q> is a covering of index index_FK", pass, details);
  }

  // C3: C is a normal finite-index subgroup with a basis of the right size.
  {
    auto st = r.c.covering_status();
    bool pass = st.finite() && *st.index == cert.n;
    std::string details;
    if (!st.finite()) {
      details = "C is not a covering";
    } else if (*st.index != cert.n) {
      details = "index " + std::to_string(*st.index) + " != n = " + std::to_string(cert.n);
    }
    std::size_t expect = 1 + static_cast<std::size_t>(cert.n) * (cert.rank - 1);
    if (pass && r.kill_words.size() != expect) {
      pass = false;
      details = "|basis_CH| + |basis_J| = " + std::to_string(r.kill_words.size()) +
                ", expected " + std::to_string(expect);
    }
    if (pass) {
      // C has finite index, so one-sided conjugation stability suffices.
      for (const Word& c : r.kill_words) {
        for (int g = 0; g < cert.rank && pass; ++g) {
          Word x = Word::single(Letter(g, true));
          if (!r.c.contains(conjugate(c, x))) {
            pass = false;
            details = "conjugate of \"" + c.str() + "\" by generator " +
                      std::string(1, Letter(g, true).to_char()) + " leaves C";
          }
        }
        if (!pass) break;
      }
    }
    add("C3", "C = <basis_CH ∪ basis_J> is a normal covering of index n", pass, details);
  }

  // C4: C equals the intersection of the conjugates K^b over the transversal.
  {
    bool pass = !r.reps.empty();
    std::string details = pass ? "" : "empty coset_reps";
    if (pass) {
      SubgroupGraph p = r.k.conjugated(r.reps[0]);
      for (std::size_t i = 1; i < r.reps.size(); ++i) {
        p = pullback(p, r.k.conjugated(r.reps[i]));
      }
      pass = p.canonical_form() == r.c.canonical_form();
      if (!pass) details = "iterated pullback of the K-conjugates differs from C";
    }
    add("C4", "C matches the independently built intersection of all K^b", pass, details);
  }

  // C5: the coset representatives form a transversal of C.
  {
    bool pass = true;
    std::string details;
    if (r.reps.size() != cert.n) {
      pass = false;
      details = "coset_reps count " + std::to_string(r.reps.size()) + " != n";
    } else if (r.reps.empty() || !r.reps[0].empty()) {
      pass = false;
      details = "coset_reps[0] is not the empty word";
    } else {
      for (std::size_t i = 0; i < r.reps.size() && pass; ++i) {
        for (std::size_t j = i + 1; j < r.reps.size() && pass; ++j) {
          if (r.c.contains(multiply(r.reps[i], r.reps[j].inverse()))) {
            pass = false;
            details = "representatives " + std::to_string(i) + " and " + std::to_string(j) +
                      " share a coset";
          }
        }
      }
    }
    add("C5", "coset_reps are n pairwise-distinct coset representatives, first = ε", pass,
        details);
  }

  // C6: basis_CH generates exactly C ∩ H.
  {
    SubgroupGraph ch = SubgroupGraph::from_generators(r.basis_CH, cert.rank);
    bool pass = ch.canonical_form() == pullback(r.c, r.h).canonical_form();
    add("C6", "<basis_CH> equals the intersection C ∩ H", pass,
        pass ? "" : "<basis_CH> differs from pullback(C, H)");
  }

  // Retraction machinery for C7/C8, built from the certificate's split only.
  BasisRewriter rewriter(r.kill_words, cert.rank, r.kill_flags);
  auto in_L = [&](const Word& w) { return rewriter.maps_to_identity(w); };
  auto in_N = [&](const Word& w) {
    for (const Word& b : r.reps) {
      if (!in_L(conjugate(w, b.inverse()))) return false;
    }
    return true;
  };

  // C7: the witness is a nontrivial element of N avoiding H, and its orbit
  // under conjugation by the generators stays in N.
  {
    bool pass = rewriter.valid();
    std::string details = pass ? "" : "basis_CH ∪ basis_J is not a free basis";
    if (pass && r.witness.empty()) {
      pass = false;
      details = "witness is the empty word";
    }
    if (pass && !in_N(r.witness)) {
      pass = false;
      details = "witness is not in N";
    }
    if (pass && r.h.contains(r.witness)) {
      pass = false;
      details = "witness lies in H";
    }
    if (pass) {
      for (int g = 0; g < cert.rank; ++g) {
        if (!in_N(conjugate(r.witness, Word::single(Letter(g, true))))) {
          pass = false;
          details = std::string("witness conjugated by ") + Letter(g, true).to_char() +
                    " leaves N";
          break;
        }
      }
    }
    add("C7", "witness ≠ ε lies in N, avoids H, and stays in N under conjugation", pass,
        details);
  }

  // C8: seeded sampling; requires the retraction machinery as well.
  {
    bool pass = rewriter.valid();
    std::string details = pass ? "" : "basis_CH ∪ basis_J is not a free basis";
    SampleRng rng(seed);
    if (pass && !r.gens.empty()) {
      for (std::uint32_t s = 0; s < sample_count && pass; ++s) {
        Word h;
        std::uint32_t steps = 1 + rng.below(2 * sample_length);
        for (std::uint32_t t = 0; t < steps; ++t) {
          const Word& g = r.gens[rng.below(static_cast<std::uint32_t>(r.gens.size()))];
          Word next = multiply(h, rng.below(2) == 0 ? g : g.inverse());
          if (next.size() > sample_length) break;
          h = std::move(next);
        }
        if (h.empty()) continue;
        if (in_N(h)) {
          pass = false;
          details = "sampled h = \"" + h.str() + "\" from H lies in N";
        }
      }
    }
    if (pass) {
      std::uint32_t products = std::max<std::uint32_t>(1, sample_count / 4);
      for (std::uint32_t s = 0; s < products && pass; ++s) {
        Word p;
        std::uint32_t parts = 1 + rng.below(3);
        for (std::uint32_t t = 0; t < parts; ++t) {
          Word c = random_reduced_word(rng, cert.rank, rng.below(4));
          Word factor = conjugate(r.witness, c);
          p = multiply(p, rng.below(2) == 0 ? factor : factor.inverse());
        }
        if (!in_N(p)) {
          pass = false;
          details = "product of witness conjugates left N";
        } else if (!p.empty() && r.h.contains(p)) {
          pass = false;
          details = "product of witness conjugates landed in H";
        }
      }
    }
    add("C8", "sampled H-elements avoid N; sampled witness-conjugate products stay in N, off H",
        pass, details);
  }

  report.overall = true;
  for (const auto& c : report.checks) report.overall = report.overall && c.pass;
  return report;
}

}  // namespace ks
