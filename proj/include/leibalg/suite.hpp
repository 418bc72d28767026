#ifndef LEIBALG_SUITE_HPP
#define LEIBALG_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibalg/document.hpp"
#include "leibalg/isoclinism.hpp"

namespace leibalg {

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t algebras = 400;  // random ones, on top of the fixed zero/abelian/example entries
  std::size_t pairs = 240;     // extension pairs for the pullback and kernel suites
  Index max_dim = 3;
  std::uint32_t prime = 3;
  SearchOptions search;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  Json details = Json::object();
  double seconds = 0;  // wall time, kept out of the JSON
};

struct ExtensionPair {
  std::string kind;
  CentralExtension<Fp> first;
  CentralExtension<Fp> second;
  std::optional<IsoclinismWitness<Fp>> witness;  // first witness found by the search
};

/// Random material shared by the property criteria, fixed by the seed.
struct SuiteData {
  SuiteConfig config;
  Field field;
  std::vector<LeibnizAlgebra<Fp>> algebras;  // entry 0 is the zero algebra
  Classification classes;
  std::vector<ExtensionPair> pairs;
  std::vector<CentralExtension<Fp>> extensions;  // every extension the homology suite runs on
};

SuiteData prepare_suite(const SuiteConfig& config);

CriterionResult check_example_values();
CriterionResult check_example_witness();
CriterionResult check_equivalence(const SuiteData& data);
CriterionResult check_abelian_class(const SuiteData& data);
CriterionResult check_natural(const SuiteData& data);
CriterionResult check_pullbacks(const SuiteData& data);
CriterionResult check_sequences(const SuiteData& data);
CriterionResult check_commutator_kernels(const SuiteData& data);

/// Criteria 1 to 8 in order.
std::vector<CriterionResult> run_suite(const SuiteConfig& config);

Json criterion_json(const CriterionResult& r);
Json suite_json(const SuiteConfig& config, const std::vector<CriterionResult>& results);

}  // namespace leibalg

#endif  // LEIBALG_SUITE_HPP
