#include "leibalg/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <sstream>

namespace leibalg {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1)
    throw std::runtime_error("sha256: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

InputDigest digest(const std::string& name, const AnyAlgebra& alg) {
  return {name, sha256_hex(serialize(alg).dump())};
}

Json report_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  Json inputs = Json::array();
  for (const auto& in : r.inputs) inputs.push_back(Json{{"name", in.name}, {"sha256", in.sha256}});
  out["inputs"] = std::move(inputs);
  out["status"] = r.status;
  out["result"] = r.result;
  return out;
}

namespace {

bool is_flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_list(const Json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    if (!first) s += ", ";
    first = false;
    s += scalar_text(x);
  }
  return s + "]";
}

void emit(std::ostringstream& out, const Json& j, int indent);

void emit_value(std::ostringstream& out, const std::string& prefix, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && !v.empty()) {
    out << pad << prefix << "\n";
    emit(out, v, indent + 2);
  } else if (v.is_array() && !is_flat(v)) {
    out << pad << prefix << "\n";
    emit(out, v, indent + 2);
  } else if (v.is_array()) {
    out << pad << prefix << " " << inline_list(v) << "\n";
  } else if (v.is_object()) {
    out << pad << prefix << " {}\n";
  } else {
    out << pad << prefix << " " << scalar_text(v) << "\n";
  }
}

void emit(std::ostringstream& out, const Json& j, int indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_value(out, k + ":", v, indent);
  } else if (j.is_array()) {
    for (const auto& v : j) emit_value(out, "-", v, indent);
  } else {
    out << std::string(static_cast<std::size_t>(indent), ' ') << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  emit(out, j, 0);
  return out.str();
}

std::string render(const Report& r, OutputFormat format) {
  const Json j = report_json(r);
  if (format == OutputFormat::json) return j.dump(2) + "\n";
  return render_text(j);
}

}  // namespace leibalg
