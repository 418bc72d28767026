#ifndef LEIBALG_COMMANDS_HPP
#define LEIBALG_COMMANDS_HPP

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "leibalg/isoclinism.hpp"
#include "leibalg/report.hpp"
#include "leibalg/suite.hpp"

namespace leibalg {

namespace exit_code {
constexpr int ok = 0;
constexpr int failure = 1;          // library refusal, e.g. the search bound
constexpr int violation = 2;        // validate found a broken identity
constexpr int none_found = 3;       // search exhausted without a witness
constexpr int witness_failed = 4;   // supplied witness did not check
constexpr int usage = 64;           // unknown command or bad arguments
constexpr int bad_input = 65;       // malformed document, bad field, invalid algebra
constexpr int io = 66;              // unreadable file or directory
}  // namespace exit_code

struct CommandOptions {
  std::optional<Field> field;  // for catalog references; checked against files
  std::uint64_t seed = 1;
  SearchOptions search;
};

struct CommandOutcome {
  Report report;
  int exit = exit_code::ok;
};

struct LoadedAlgebra {
  std::string name;
  AnyAlgebra algebra;
};

/// "Q" or an odd prime.
Field parse_field_flag(const std::string& text);

/// "catalog:NAME" or a path to a document. Documents are validated unless asked not to.
LoadedAlgebra load_algebra(const std::string& ref, const CommandOptions& opts, bool check = true);

CommandOutcome run_validate(const std::string& ref, const CommandOptions& opts);
CommandOutcome run_invariants(const std::string& ref, const CommandOptions& opts);
/// Searches when no witness file is given.
CommandOutcome run_isoclinic(const std::string& a, const std::string& b, const std::optional<std::string>& witness_path,
                             const CommandOptions& opts);
CommandOutcome run_classify(const std::string& dir, const CommandOptions& opts);

/// kind: canonical | product | backward | pullback | liezation.
struct ExtensionRequest {
  std::string kind;
  std::vector<std::string> refs;
  Index abelian_dim = 1;                   // product
  std::optional<std::string> witness_path;  // backward, pullback
};
CommandOutcome run_extension(const ExtensionRequest& req, const CommandOptions& opts);

CommandOutcome run_catalog_list();
CommandOutcome run_catalog_show(const std::string& name, const CommandOptions& opts);
CommandOutcome run_suite_command(const SuiteConfig& config);

/// Report and exit code for an exception escaping a command.
CommandOutcome error_outcome(const std::string& command, const std::exception& err);

}  // namespace leibalg

#endif  // LEIBALG_COMMANDS_HPP
