#include "leibalg/catalog.hpp"

#include <cctype>

namespace leibalg {

namespace {

template <class S>
Vector<S> unit(const Field& f, Index n, Index k) {
  Vector<S> v = Vector<S>::Constant(n, make_scalar<S>(f, 0));
  v(k) = make_scalar<S>(f, 1);
  return v;
}

template <class S>
LeibnizAlgebra<S> first_example(const Field& f) {
  using E = typename LeibnizAlgebra<S>::Entry;
  const auto e2 = unit<S>(f, 2, 1);
  return LeibnizAlgebra<S>::from_brackets(f, 2, {E{0, 0, e2}, E{1, 0, e2}}, {"e1", "e2"});
}

template <class S>
LeibnizAlgebra<S> second_example(const Field& f) {
  using E = typename LeibnizAlgebra<S>::Entry;
  const auto a3 = unit<S>(f, 3, 2);
  return LeibnizAlgebra<S>::from_brackets(f, 3, {E{0, 0, a3}, E{1, 0, a3}, E{2, 0, a3}}, {"a1", "a2", "a3"});
}

template <class S>
AnyAlgebra build(const std::string& name, const Field& f) {
  if (name == "paper_g1") return first_example<S>(f);
  if (name == "paper_g2") return second_example<S>(f);
  if (name == "paper_q2") {
    const auto g = second_example<S>(f);
    return quotient_algebra(g, lie_center(g)).algebra;
  }
  const std::string prefix = "abelian_";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() && name.size() <= prefix.size() + 3) {
    const auto digits = name.substr(prefix.size());
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorKind::schema, "unknown catalog entry '" + name + "'");
    return LeibnizAlgebra<S>::abelian(f, std::stoi(digits));
  }
  throw Error(ErrorKind::schema, "unknown catalog entry '" + name + "'");
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"paper_g1", "span{e1,e2} with [e1,e1] = [e2,e1] = e2"},
      {"paper_g2", "span{a1,a2,a3} with [a1,a1] = [a2,a1] = [a3,a1] = a3"},
      {"paper_q2", "paper_g2 / Z_Lie(paper_g2), basis classes of a1, a3"},
      {"abelian_<n>", "n-dimensional algebra with zero bracket"},
  };
}

AnyAlgebra catalog_algebra(const std::string& name, const Field& field) {
  if (field.is_rationals()) return build<Rational>(name, field);
  return build<Fp>(name, field);
}

}  // namespace leibalg
