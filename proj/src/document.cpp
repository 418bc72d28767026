#include "leibalg/document.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace leibalg {

Field parse_field(const Json& spec) {
  if (spec.is_string()) {
    if (spec.get<std::string>() == "Q") return Field::rationals();
    throw Error(ErrorKind::schema, "field must be \"Q\" or {\"p\": N}");
  }
  if (!spec.is_object() || !spec.contains("p") || !spec["p"].is_number_integer())
    throw Error(ErrorKind::schema, "field must be \"Q\" or {\"p\": N}");
  const auto p = spec["p"].get<long long>();
  if (p <= 1 || p > std::numeric_limits<std::int32_t>::max())
    throw Error(ErrorKind::field, "p = " + std::to_string(p) + " is not an odd prime");
  return Field::prime(static_cast<std::uint32_t>(p));
}

Json field_json(const Field& f) {
  if (f.is_rationals()) return "Q";
  return Json{{"p", f.characteristic()}};
}

Json scalar_json(const Rational& x, const Field&) {
  const auto den = x.denominator();
  const auto num = x.numerator();
  if (den == 1 && num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
    return static_cast<long long>(num);
  return x.to_string();
}

Json scalar_json(const Fp& x, const Field& f) {
  return x.residue(f.characteristic());
}

Rational parse_rational(const Json& x) {
  if (x.is_number_integer()) return Rational(Rational::Integer(x.get<long long>()), Rational::Integer(1));
  if (x.is_string()) return Rational::parse(x.get<std::string>());
  throw Error(ErrorKind::schema, "coefficient must be an integer or a string \"n/d\"");
}

Fp parse_residue(const Json& x, const Field& f) {
  if (!x.is_number_integer()) throw Error(ErrorKind::schema, "coefficients over F_p must be integers");
  return Fp(x.get<long long>(), f.characteristic());
}

Json serialize(const AnyAlgebra& a) {
  return std::visit([](const auto& g) { return serialize(g); }, a);
}

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::schema, std::string("missing key '") + key + "'");
  return doc[key];
}

Index read_index(const Json& x, Index n, const char* what) {
  if (!x.is_number_integer()) throw Error(ErrorKind::schema, std::string(what) + " must be an integer");
  const auto i = x.get<long long>();
  if (i < 0 || i >= n) throw Error(ErrorKind::schema, std::string(what) + " index " + std::to_string(i) + " out of range");
  return static_cast<Index>(i);
}

template <class S>
LeibnizAlgebra<S> build(const Json& doc, const Field& field, Index n, std::vector<std::string> names) {
  using Entry = typename LeibnizAlgebra<S>::Entry;
  std::vector<Entry> entries;
  std::set<std::pair<Index, Index>> seen;
  const auto& brackets = require(doc, "brackets");
  if (!brackets.is_array()) throw Error(ErrorKind::schema, "brackets must be a list");
  for (const auto& b : brackets) {
    if (!b.is_object()) throw Error(ErrorKind::schema, "bracket entries must be objects");
    const Index i = read_index(require(b, "left"), n, "left");
    const Index j = read_index(require(b, "right"), n, "right");
    if (!seen.insert({i, j}).second)
      throw Error(ErrorKind::schema, "duplicate bracket entry [" + std::to_string(i) + "," + std::to_string(j) + "]");
    const auto& value = require(b, "value");
    if (!value.is_array() || static_cast<Index>(value.size()) != n)
      throw Error(ErrorKind::schema, "bracket value must list " + std::to_string(n) + " coefficients");
    Vector<S> v(n);
    for (Index k = 0; k < n; ++k) v(k) = parse_scalar<S>(value[static_cast<std::size_t>(k)], field);
    entries.push_back({i, j, std::move(v)});
  }
  return LeibnizAlgebra<S>::from_brackets(field, n, entries, std::move(names));
}

}  // namespace

AnyAlgebra parse_unchecked(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::schema, "document must be a JSON object");
  const auto& version = require(doc, "schema_version");
  if (!version.is_string() || version.get<std::string>() != "1")
    throw Error(ErrorKind::schema, "unsupported schema_version (expected \"1\")");
  const Field field = parse_field(require(doc, "field"));
  const auto& dim = require(doc, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 0) throw Error(ErrorKind::schema, "dim must be a non-negative integer");
  const auto n = static_cast<Index>(dim.get<long long>());
  std::vector<std::string> names;
  if (doc.contains("basis")) {
    const auto& basis = doc["basis"];
    if (!basis.is_array() || static_cast<Index>(basis.size()) != n)
      throw Error(ErrorKind::schema, "basis must list " + std::to_string(n) + " names");
    for (const auto& name : basis) {
      if (!name.is_string()) throw Error(ErrorKind::schema, "basis names must be strings");
      names.push_back(name.get<std::string>());
    }
  }
  if (field.is_rationals()) return build<Rational>(doc, field, n, std::move(names));
  return build<Fp>(doc, field, n, std::move(names));
}

AnyAlgebra parse(const Json& doc) {
  auto alg = parse_unchecked(doc);
  std::visit(
      [](const auto& g) {
        const auto check = validate(g);
        if (check.ok) return;
        const auto& t = check.triple;
        std::ostringstream msg;
        msg << "Leibniz identity fails at (" << g.names()[static_cast<std::size_t>(t[0])] << ", "
            << g.names()[static_cast<std::size_t>(t[1])] << ", " << g.names()[static_cast<std::size_t>(t[2])]
            << "): residual " << format_vector(check.residual, g.names(), g.field());
        throw Error(ErrorKind::leibniz_identity, msg.str());
      },
      alg);
  return alg;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::schema, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace leibalg
