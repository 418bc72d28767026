#ifndef LEIBALG_ERROR_HPP
#define LEIBALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace leibalg {

enum class ErrorKind {
  field,              // unsupported or mismatched ground field
  dimension,          // shape mismatch between vectors, matrices or spaces
  not_ideal,          // subspace is not a two-sided ideal
  not_homomorphism,   // matrix does not preserve the bracket or a diagram
  not_isomorphism,    // map expected to be bijective is not
  invalid_extension,  // sequence is not a Lie-central extension
  search,             // search refused (infinite field, size guard)
  schema,             // malformed document
  leibniz_identity,   // structure constants violate the Leibniz identity
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::field: return "field";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::not_ideal: return "not_ideal";
    case ErrorKind::not_homomorphism: return "not_homomorphism";
    case ErrorKind::not_isomorphism: return "not_isomorphism";
    case ErrorKind::invalid_extension: return "invalid_extension";
    case ErrorKind::search: return "search";
    case ErrorKind::schema: return "schema";
    case ErrorKind::leibniz_identity: return "leibniz_identity";
  }
  return "";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace leibalg

#endif  // LEIBALG_ERROR_HPP
