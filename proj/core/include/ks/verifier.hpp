#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ks/certificate.hpp"

namespace ks {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string details;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall = false;

  const CheckResult& check(const std::string& id) const;
};

std::string report_to_json(const VerificationReport& report);

/// Re-checks a certificate from scratch, trusting only word algebra and
/// automata rebuilt from the certificate's words (never the builder's
/// in-memory state). Checks C1–C8; `overall` is their conjunction. Any
/// valid certificate passes, not just the ones this tool emits. Throws
/// MalformedCertificate when words or fields cannot be read at all.
VerificationReport verify(const WitnessCertificate& cert, std::uint32_t sample_count,
                          std::uint32_t sample_length, std::uint64_t seed);

}  // namespace ks
