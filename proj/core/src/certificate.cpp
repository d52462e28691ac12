#include "ks/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ks/errors.hpp"

namespace ks {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw MalformedCertificate(std::string("missing or ill-typed field: ") + key);
  }
  std::vector<std::string> out;
  for (const auto& item : j[key]) {
    if (!item.is_string()) {
      throw MalformedCertificate(std::string("non-string entry in field: ") + key);
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string string_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw MalformedCertificate(std::string("missing or ill-typed field: ") + key);
  }
  return j[key].get<std::string>();
}

std::int64_t int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw MalformedCertificate(std::string("missing or ill-typed field: ") + key);
  }
  return j[key].get<std::int64_t>();
}

}  // namespace

std::string certificate_to_json(const WitnessCertificate& cert) {
  Json j;
  j["rank"] = cert.rank;
  j["input_generators"] = cert.input_generators;
  j["basis_H"] = cert.basis_H;
  j["basis_Q"] = cert.basis_Q;
  j["index_FK"] = cert.index_FK;
  j["n"] = cert.n;
  j["coset_reps"] = cert.coset_reps;
  j["basis_CH"] = cert.basis_CH;
  j["basis_J"] = cert.basis_J;
  j["chosen_j"] = cert.chosen_j;
  j["factors_x"] = cert.factors_x;
  j["witness"] = cert.witness;
  j["construction_log"] = cert.construction_log;
  j["tool_version"] = cert.tool_version;
  return j.dump(2) + "\n";
}

WitnessCertificate certificate_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedCertificate(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedCertificate("certificate is not a JSON object");

  WitnessCertificate cert;
  std::int64_t rank = int_field(j, "rank");
  if (rank < 1 || rank > 26) throw MalformedCertificate("rank out of range [1, 26]");
  cert.rank = static_cast<int>(rank);
  cert.input_generators = string_list(j, "input_generators");
  cert.basis_H = string_list(j, "basis_H");
  cert.basis_Q = string_list(j, "basis_Q");
  std::int64_t index = int_field(j, "index_FK");
  std::int64_t n = int_field(j, "n");
  if (index < 1 || n < 1) throw MalformedCertificate("index_FK and n must be positive");
  cert.index_FK = static_cast<std::uint32_t>(index);
  cert.n = static_cast<std::uint32_t>(n);
  cert.coset_reps = string_list(j, "coset_reps");
  cert.basis_CH = string_list(j, "basis_CH");
  cert.basis_J = string_list(j, "basis_J");
  cert.chosen_j = string_field(j, "chosen_j");
  cert.factors_x = string_list(j, "factors_x");
  cert.witness = string_field(j, "witness");
  cert.construction_log = string_list(j, "construction_log");
  cert.tool_version = string_field(j, "tool_version");
  return cert;
}

WitnessCertificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open certificate file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return certificate_from_json(buf.str());
}

void save_certificate(const WitnessCertificate& cert, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write certificate file: " + path);
  out << certificate_to_json(cert);
}

}  // namespace ks
