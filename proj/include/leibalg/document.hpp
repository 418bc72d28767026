#ifndef LEIBALG_DOCUMENT_HPP
#define LEIBALG_DOCUMENT_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "leibalg/algebra.hpp"

namespace leibalg {

using Json = nlohmann::ordered_json;

/// An algebra over whichever field its document names.
using AnyAlgebra = std::variant<LeibnizAlgebra<Rational>, LeibnizAlgebra<Fp>>;

inline const Field& field_of(const AnyAlgebra& a) {
  return std::visit([](const auto& g) -> const Field& { return g.field(); }, a);
}

inline Index dim_of(const AnyAlgebra& a) {
  return std::visit([](const auto& g) { return g.dim(); }, a);
}

/// "Q" or {"p": N}.
Field parse_field(const Json& spec);
Json field_json(const Field& f);

Json scalar_json(const Rational& x, const Field& f);
Json scalar_json(const Fp& x, const Field& f);

template <class S>
Json vector_json(const Vector<S>& v, const Field& f) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_json(v(i), f));
  return out;
}

/// Row-major list of rows.
template <class S>
Json matrix_json(const Matrix<S>& m, const Field& f) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(Vector<S>(m.row(i).transpose()), f));
  return out;
}

Rational parse_rational(const Json& x);
Fp parse_residue(const Json& x, const Field& f);

template <class S>
S parse_scalar(const Json& x, const Field& f);

template <>
inline Rational parse_scalar<Rational>(const Json& x, const Field&) {
  return parse_rational(x);
}

template <>
inline Fp parse_scalar<Fp>(const Json& x, const Field& f) {
  return parse_residue(x, f);
}

/// Rows of a matrix document with the given shape.
template <class S>
Matrix<S> parse_matrix(const Json& rows, const Field& f, Index r, Index c, const std::string& what) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != r)
    throw Error(ErrorKind::schema, what + ": expected " + std::to_string(r) + " rows");
  Matrix<S> m(r, c);
  for (Index i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c)
      throw Error(ErrorKind::schema, what + ": expected " + std::to_string(c) + " entries per row");
    for (Index j = 0; j < c; ++j) m(i, j) = parse_scalar<S>(row[static_cast<std::size_t>(j)], f);
  }
  return m;
}

/// Schema version "1" document; brackets sorted by (left, right), zero entries omitted.
template <class S>
Json serialize(const LeibnizAlgebra<S>& g) {
  Json doc;
  doc["schema_version"] = "1";
  doc["field"] = field_json(g.field());
  doc["dim"] = g.dim();
  doc["basis"] = g.names();
  Json brackets = Json::array();
  for (Index i = 0; i < g.dim(); ++i)
    for (Index j = 0; j < g.dim(); ++j) {
      const Vector<S> v = g.bracket(i, j);
      if (all_zero(v)) continue;
      brackets.push_back(Json{{"left", i}, {"right", j}, {"value", vector_json(v, g.field())}});
    }
  doc["brackets"] = std::move(brackets);
  return doc;
}

Json serialize(const AnyAlgebra& a);

/// {"dim": k, "basis": [...]} with the RREF basis written in g's basis names.
template <class S>
Json subspace_json(const Subspace<S>& sub, const LeibnizAlgebra<S>& g) {
  Json basis = Json::array();
  for (Index r = 0; r < sub.dim(); ++r) basis.push_back(format_vector(sub.basis_vector(r), g.names(), g.field()));
  return Json{{"dim", sub.dim()}, {"basis", std::move(basis)}};
}

/// Structure only: schema and field checks, no Leibniz identity check.
AnyAlgebra parse_unchecked(const Json& doc);

/// parse_unchecked followed by validate; a violation throws leibniz_identity
/// naming the first failing triple.
AnyAlgebra parse(const Json& doc);

/// Reads and parses JSON text from a file; IO failures throw std::ios_base::failure.
Json read_json_file(const std::string& path);

}  // namespace leibalg

#endif  // LEIBALG_DOCUMENT_HPP
