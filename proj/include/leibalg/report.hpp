#ifndef LEIBALG_REPORT_HPP
#define LEIBALG_REPORT_HPP

#include <string>
#include <vector>

#include "leibalg/document.hpp"

namespace leibalg {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

struct InputDigest {
  std::string name;
  std::string sha256;  // of the canonical serialized document
};

/// Digest of an algebra's canonical document (compact dump of serialize).
InputDigest digest(const std::string& name, const AnyAlgebra& alg);

struct Report {
  std::string command;
  std::vector<InputDigest> inputs;
  std::string status;  // ok, violation, none_found, witness_failed, error
  Json result = Json::object();
};

enum class OutputFormat { json, text };

Json report_json(const Report& r);

/// Both formats are rendered from report_json, so they carry the same numbers.
std::string render(const Report& r, OutputFormat format);

/// Indented "key: value" lines; scalar lists stay on one line.
std::string render_text(const Json& j);

}  // namespace leibalg

#endif  // LEIBALG_REPORT_HPP
