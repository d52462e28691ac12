// ks: witness certificates for the disjointness of a finitely generated
// infinite-index subgroup of a free group from a nontrivial normal subgroup.
//
// Exit codes: 0 success, 1 verification failure, 2 finite-index input,
// 3 core cap exceeded, 4 witness search exhausted, 5 witness too large,
// 64 usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ks/certificate.hpp"
#include "ks/errors.hpp"
#include "ks/oracle.hpp"
#include "ks/pipeline.hpp"
#include "ks/verifier.hpp"
#include "ks/witness.hpp"
#include "ks/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitFiniteIndex = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitSearchExhausted = 4;
constexpr int kExitWitnessTooLarge = 5;
constexpr int kExitUsage = 64;

struct CommonConfig {
  int rank = 2;
  std::string gens_text;
  bool trivial = false;
  std::uint32_t max_core = 5000;
  int max_attempts = 64;
  std::size_t max_witness_length = 1000000;
  std::uint64_t seed = 0;
  std::uint32_t sample_count = 200;
  std::uint32_t sample_length = 20;
  std::string output = "json";
  std::string out_path;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<ks::Word> parse_gens(const std::string& text, int rank, bool allow_empty) {
  std::vector<ks::Word> gens;
  for (const std::string& t : split_commas(text)) {
    gens.push_back(ks::Word::parse(t, rank));
  }
  if (gens.empty() && !allow_empty) {
    throw CLI::ValidationError("--gens", "generator list is empty (use --trivial for H = {1})");
  }
  return gens;
}

void apply_seed_env(CommonConfig& cfg) {
  if (const char* env = std::getenv("KS_SEED")) {
    cfg.seed = std::strtoull(env, nullptr, 10);
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ks::Error("cannot write to " + out_path);
  out << text;
}

void add_subgroup_flags(CLI::App* cmd, CommonConfig& cfg) {
  cmd->add_option("--rank", cfg.rank, "rank of the ambient free group (1..26)")
      ->check(CLI::Range(1, 26));
  cmd->add_option("--gens", cfg.gens_text, "comma-separated generator words, e.g. a^2,b");
  cmd->add_flag("--trivial", cfg.trivial, "analyze the trivial subgroup H = {1}");
}

void add_cap_flags(CLI::App* cmd, CommonConfig& cfg) {
  cmd->add_option("--max-core", cfg.max_core, "cap on the order of the coset-action image");
  cmd->add_option("--max-attempts", cfg.max_attempts, "fallback attempts per witness factor");
  cmd->add_option("--max-witness-length", cfg.max_witness_length, "cap on witness length");
}

void add_sample_flags(CLI::App* cmd, CommonConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "sampling seed (KS_SEED overrides)");
  cmd->add_option("--sample-count", cfg.sample_count, "verification sample count");
  cmd->add_option("--sample-length", cfg.sample_length, "verification sample length");
}

std::string pretty_certificate(const ks::WitnessCertificate& c) {
  std::ostringstream out;
  auto list = [&](const char* name, const std::vector<std::string>& ws) {
    out << "  " << name << " =";
    for (const auto& w : ws) out << " \"" << w << "\"";
    out << "\n";
  };
  out << "rank " << c.rank << ", [F:K] = " << c.index_FK << ", [F:C] = n = " << c.n << "\n";
  list("input generators", c.input_generators);
  list("basis_H", c.basis_H);
  list("basis_Q", c.basis_Q);
  list("coset reps", c.coset_reps);
  list("basis_CH", c.basis_CH);
  list("basis_J", c.basis_J);
  out << "  chosen j = \"" << c.chosen_j << "\"\n";
  out << "  witness = \"" << c.witness << "\" (length " << c.witness.size() << ")\n";
  return out.str();
}

std::string pretty_report(const ks::VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.description;
    if (!c.details.empty()) out << "  [" << c.details << "]";
    out << "\n";
  }
  out << (r.overall ? "overall: PASS" : "overall: FAIL") << "\n";
  return out.str();
}

int run_analyze(const CommonConfig& cfg) {
  auto gens = parse_gens(cfg.gens_text, cfg.rank, cfg.trivial);
  ks::AnalyzeOptions options{cfg.rank, cfg.max_core, cfg.max_attempts, cfg.max_witness_length};
  ks::AnalyzeResult result = ks::analyze(gens, options);
  if (cfg.output == "pretty") {
    write_output(pretty_certificate(result.certificate), cfg.out_path);
  } else {
    write_output(ks::certificate_to_json(result.certificate), cfg.out_path);
  }
  return kExitOk;
}

int run_verify(const CommonConfig& cfg, const std::string& cert_path) {
  ks::WitnessCertificate cert = ks::load_certificate(cert_path);
  ks::VerificationReport report = ks::verify(cert, cfg.sample_count, cfg.sample_length, cfg.seed);
  if (cfg.output == "pretty") {
    write_output(pretty_report(report), cfg.out_path);
  } else {
    write_output(ks::report_to_json(report), cfg.out_path);
  }
  return report.overall ? kExitOk : kExitVerifyFail;
}

int run_member(const CommonConfig& cfg, const std::string& target, const std::string& word_text) {
  auto gens = parse_gens(cfg.gens_text, cfg.rank, cfg.trivial);
  ks::Word w = ks::Word::parse(word_text, cfg.rank);
  bool answer = false;
  if (target == "H") {
    answer = ks::SubgroupGraph::from_generators(gens, cfg.rank).contains(w);
  } else {
    ks::PipelineContext ctx = ks::make_context(gens, cfg.rank, cfg.max_core);
    if (target == "K") {
      answer = ctx.in_K(w);
    } else if (target == "C") {
      answer = ctx.in_C(w);
    } else if (target == "L") {
      answer = ks::member_of_L(ctx, w);
    } else {
      answer = ks::member_of_N(ctx, w);
    }
  }
  std::cout << (answer ? "true" : "false") << "\n";
  return kExitOk;
}

int run_intersect(const CommonConfig& cfg, const std::string& gens1, const std::string& gens2) {
  auto g1 = ks::SubgroupGraph::from_generators(parse_gens(gens1, cfg.rank, true), cfg.rank);
  auto g2 = ks::SubgroupGraph::from_generators(parse_gens(gens2, cfg.rank, true), cfg.rank);
  auto meet = ks::pullback(g1, g2);
  auto basis = meet.basis(meet.spanning_tree());
  std::ostringstream out;
  if (cfg.output == "pretty") {
    if (basis.entries.empty()) out << "(trivial intersection)\n";
    for (const auto& e : basis.entries) out << e.word.str() << "\n";
  } else {
    out << "{\"basis\": [";
    for (std::size_t i = 0; i < basis.entries.size(); ++i) {
      out << (i ? ", " : "") << "\"" << basis.entries[i].word.str() << "\"";
    }
    out << "]}\n";
  }
  write_output(out.str(), cfg.out_path);
  return kExitOk;
}

const char* outcome_name(ks::CorpusOutcome o) {
  switch (o) {
    case ks::CorpusOutcome::Verified: return "ok";
    case ks::CorpusOutcome::VerifyFailed: return "VERIFY-FAIL";
    case ks::CorpusOutcome::FiniteIndexSkip: return "finite-index";
    case ks::CorpusOutcome::CapExceededSkip: return "core-cap";
    case ks::CorpusOutcome::WitnessTooLargeSkip: return "witness-cap";
    case ks::CorpusOutcome::SearchExhaustedSkip: return "search-exhausted";
  }
  return "?";
}

int run_corpus(const CommonConfig& cfg, int count) {
  ks::CorpusOptions options;
  options.analyze =
      ks::AnalyzeOptions{cfg.rank, cfg.max_core, cfg.max_attempts, cfg.max_witness_length};
  options.sample_count = cfg.sample_count;
  options.sample_length = cfg.sample_length;
  ks::CorpusSummary summary = ks::run_corpus(cfg.seed, count, options);

  std::ostringstream out;
  out << "case  outcome           n      |w|    generators\n";
  for (std::size_t i = 0; i < summary.cases.size(); ++i) {
    const auto& c = summary.cases[i];
    std::string gens;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
      gens += (g ? "," : "") + c.generators[g];
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-5zu %-17s %-6u %-6zu %s\n", i, outcome_name(c.outcome),
                  c.n, c.witness_length, gens.c_str());
    out << line;
  }
  int analyzed = summary.analyzed();
  out << "cases: " << summary.cases.size() << ", analyzed: " << analyzed
      << ", verified: " << summary.verified;
  if (analyzed > 0) out << " (" << 100.0 * summary.verified / analyzed << "%)";
  out << "\nskips: finite-index " << summary.finite_index << ", core-cap " << summary.cap_exceeded
      << ", witness-cap " << summary.witness_too_large << ", search-exhausted "
      << summary.search_exhausted << "\n";
  out << "max n: " << summary.max_n << ", max |w|: " << summary.max_witness_length
      << ", wall: " << summary.seconds << " s\n";
  write_output(out.str(), cfg.out_path);
  return summary.verify_failed == 0 ? kExitOk : kExitVerifyFail;
}

const char* answer_name(const ks::OracleAnswer& a) {
  switch (a.kind) {
    case ks::OracleAnswer::Kind::Yes: return "yes";
    case ks::OracleAnswer::Kind::No: return "no";
    case ks::OracleAnswer::Kind::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witness certificates for subgroup/normal-subgroup disjointness in free groups"};
  app.require_subcommand(1);

  CommonConfig cfg;

  auto* analyze_cmd = app.add_subcommand("analyze", "construct N and a witness certificate");
  add_subgroup_flags(analyze_cmd, cfg);
  add_cap_flags(analyze_cmd, cfg);
  analyze_cmd->add_option("--out,-o", cfg.out_path, "certificate file (default: stdout)");
  analyze_cmd->add_option("--output", cfg.output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate from scratch");
  verify_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();
  add_sample_flags(verify_cmd, cfg);
  verify_cmd->add_option("--out,-o", cfg.out_path, "report file (default: stdout)");
  verify_cmd->add_option("--output", cfg.output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string member_word, member_target = "N";
  auto* member_cmd = app.add_subcommand("member", "test membership in H, K, C, L or N");
  add_subgroup_flags(member_cmd, cfg);
  add_cap_flags(member_cmd, cfg);
  member_cmd->add_option("word", member_word, "word to test")->required();
  member_cmd->add_option("--target", member_target, "H, K, C, L or N")
      ->check(CLI::IsMember({"H", "K", "C", "L", "N"}));

  std::string gens1, gens2;
  auto* intersect_cmd = app.add_subcommand("intersect", "basis of an intersection of subgroups");
  intersect_cmd->add_option("--rank", cfg.rank, "rank of the ambient free group")
      ->check(CLI::Range(1, 26));
  intersect_cmd->add_option("--gens1", gens1, "first subgroup")->required();
  intersect_cmd->add_option("--gens2", gens2, "second subgroup")->required();
  intersect_cmd->add_option("--out,-o", cfg.out_path, "output file (default: stdout)");
  intersect_cmd->add_option("--output", cfg.output, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  int corpus_count = 100;
  auto* corpus_cmd = app.add_subcommand("corpus", "analyze+verify seeded random subgroups");
  corpus_cmd->add_option("--count", corpus_count, "number of random subgroups");
  corpus_cmd->add_option("--rank", cfg.rank, "rank of the ambient free group")
      ->check(CLI::Range(1, 26));
  add_cap_flags(corpus_cmd, cfg);
  add_sample_flags(corpus_cmd, cfg);
  corpus_cmd->add_option("--out,-o", cfg.out_path, "output file (default: stdout)");

  // Debugging aid, hidden from help.
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force oracles");
  oracle_cmd->group("");
  std::string oracle_kind, oracle_word, oracle_conj;
  int oracle_depth = 3, oracle_radius = 3;
  oracle_cmd->add_option("kind", oracle_kind, "member | ball | closure")->required();
  oracle_cmd->add_option("--rank", cfg.rank, "rank")->check(CLI::Range(1, 26));
  oracle_cmd->add_option("--gens", cfg.gens_text, "generators");
  oracle_cmd->add_option("--word", oracle_word, "word to test");
  oracle_cmd->add_option("--conjugators", oracle_conj, "conjugator words");
  oracle_cmd->add_option("--depth", oracle_depth, "product depth");
  oracle_cmd->add_option("--radius", oracle_radius, "ball radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  apply_seed_env(cfg);

  try {
    if (app.got_subcommand(analyze_cmd)) return run_analyze(cfg);
    if (app.got_subcommand(verify_cmd)) return run_verify(cfg, cert_path);
    if (app.got_subcommand(member_cmd)) return run_member(cfg, member_target, member_word);
    if (app.got_subcommand(intersect_cmd)) return run_intersect(cfg, gens1, gens2);
    if (app.got_subcommand(corpus_cmd)) return run_corpus(cfg, corpus_count);
    if (app.got_subcommand(oracle_cmd)) {
      auto gens = parse_gens(cfg.gens_text, cfg.rank, true);
      if (oracle_kind == "ball") {
        std::cout << ks::ball(cfg.rank, oracle_radius).size() << "\n";
        return kExitOk;
      }
      ks::Word w = ks::Word::parse(oracle_word, cfg.rank);
      if (oracle_kind == "member") {
        std::cout << answer_name(ks::naive_member(gens, w, oracle_depth)) << "\n";
        return kExitOk;
      }
      if (oracle_kind == "closure") {
        auto conjugators = parse_gens(oracle_conj, cfg.rank, true);
        conjugators.insert(conjugators.begin(), ks::Word());
        std::cout << answer_name(ks::naive_closure_member(gens, conjugators, w, oracle_depth))
                  << "\n";
        return kExitOk;
      }
      std::cerr << "unknown oracle kind: " << oracle_kind << "\n";
      return kExitUsage;
    }
  } catch (const ks::FiniteIndex& e) {
    std::cerr << "error: " << e.what()
              << "; a finite-index subgroup meets every nontrivial normal subgroup of F, "
                 "so no witness exists\n";
    return kExitFiniteIndex;
  } catch (const ks::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ks::SearchExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSearchExhausted;
  } catch (const ks::WitnessTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWitnessTooLarge;
  } catch (const ks::MalformedCertificate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const ks::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
