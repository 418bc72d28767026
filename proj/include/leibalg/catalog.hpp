#ifndef LEIBALG_CATALOG_HPP
#define LEIBALG_CATALOG_HPP

#include <string>
#include <vector>

#include "leibalg/document.hpp"

namespace leibalg {

struct CatalogEntry {
  std::string name;
  std::string description;
};

/// Fixed entries plus the parametric family, listed as "abelian_<n>".
std::vector<CatalogEntry> catalog_entries();

/// paper_g1, paper_g2, paper_q2 or abelian_<n> over the given field.
AnyAlgebra catalog_algebra(const std::string& name, const Field& field);

}  // namespace leibalg

#endif  // LEIBALG_CATALOG_HPP
