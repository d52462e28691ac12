#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ks {

inline constexpr const char* kToolVersion = "ks 1.0.0";

/// Self-contained record of one construction: every field a verifier needs
/// to re-check the result from scratch, all words in compact text form.
struct WitnessCertificate {
  int rank = 0;
  std::vector<std::string> input_generators;
  std::vector<std::string> basis_H;
  std::vector<std::string> basis_Q;
  std::uint32_t index_FK = 0;
  std::uint32_t n = 0;
  std::vector<std::string> coset_reps;
  std::vector<std::string> basis_CH;
  std::vector<std::string> basis_J;
  std::string chosen_j;
  std::vector<std::string> factors_x;
  std::string witness;
  std::vector<std::string> construction_log;
  std::string tool_version = kToolVersion;

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

/// Fixed-order JSON with 2-space indent; byte-identical for equal
/// certificates.
std::string certificate_to_json(const WitnessCertificate& cert);

/// Throws MalformedCertificate on missing or ill-typed fields.
WitnessCertificate certificate_from_json(const std::string& text);

WitnessCertificate load_certificate(const std::string& path);
void save_certificate(const WitnessCertificate& cert, const std::string& path);

}  // namespace ks
