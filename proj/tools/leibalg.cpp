// Command-line front end: parses flags, dispatches to the command layer and
// prints the report.
#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "leibalg/commands.hpp"

using namespace leibalg;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Leibniz algebras: Lie-centers, Lie-commutators, Lie-central extensions and Lie-isoclinism."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string field_text;
  std::uint64_t seed = 1;
  std::uint64_t max_gl = SearchOptions{}.max_gl;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--field", field_text, "Ground field for catalog entries and classify: Q or an odd prime");
  app.add_option("--seed", seed, "Seed for the random suite");
  app.add_option("--max-gl", max_gl, "Largest |GL(q)| the isoclinism search accepts")->envname("LEIBALG_MAX_GL");

  std::string ref_a, ref_b, witness, dir, name;
  bool search = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the Leibniz identity; exit 2 on a violation");
  validate_cmd->add_option("file", ref_a, "Algebra document or catalog:NAME")->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "Lie-center, Lie-commutator, annihilator, Liezation and stem data");
  invariants_cmd->add_option("algebra", ref_a, "Algebra document or catalog:NAME")->required();

  auto* iso_cmd = app.add_subcommand("isoclinic", "Search for or check a Lie-isoclinism between two algebras");
  iso_cmd->add_option("first", ref_a)->required();
  iso_cmd->add_option("second", ref_b)->required();
  auto* search_flag = iso_cmd->add_flag("--search", search, "Search GL(q) for the first witness (default)");
  iso_cmd->add_option("--witness", witness, "JSON file with eta and xi rows to check")->excludes(search_flag);

  auto* classify_cmd = app.add_subcommand("classify", "Partition the *.json documents of a directory by Lie-isoclinism");
  classify_cmd->add_option("dir", dir)->required();

  auto* ext_cmd = app.add_subcommand("extension", "Build and check Lie-central extensions");
  ext_cmd->require_subcommand(1);
  ExtensionRequest ext;
  Index abelian_dim = 1;
  std::string ext_witness;
  for (const char* kind : {"canonical", "product", "backward", "pullback", "liezation"}) {
    auto* sub = ext_cmd->add_subcommand(kind);
    const bool pair = std::string(kind) == "backward" || std::string(kind) == "pullback";
    sub->add_option("algebras", ext.refs, pair ? "Two algebras" : "One algebra")->required()->expected(pair ? 2 : 1);
    if (std::string(kind) == "product") sub->add_option("--abelian", abelian_dim, "Dimension of the abelian factor");
    if (pair) sub->add_option("--witness", ext_witness, "Witness file for eta; searched when absent");
    sub->callback([&ext, kind] { ext.kind = kind; });
  }
  ext_cmd->alias("ext");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List entries");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Print an entry as a document");
  show_cmd->add_option("name", name)->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run the randomized property suite and report every criterion");
  SuiteConfig suite;
  suite_cmd->add_option("--algebras", suite.algebras, "Random algebras in the suite");
  suite_cmd->add_option("--pairs", suite.pairs, "Random extension pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "leibalg: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_code::usage;
  }

  const OutputFormat out_format = format == "text" ? OutputFormat::text : OutputFormat::json;
  std::string command = app.get_subcommands().front()->get_name();
  CommandOutcome outcome;
  try {
    CommandOptions opts;
    opts.seed = seed;
    opts.search.max_gl = max_gl;
    if (!field_text.empty()) opts.field = parse_field_flag(field_text);
    if (*validate_cmd) {
      outcome = run_validate(ref_a, opts);
    } else if (*invariants_cmd) {
      outcome = run_invariants(ref_a, opts);
    } else if (*iso_cmd) {
      outcome = run_isoclinic(ref_a, ref_b, witness.empty() ? std::nullopt : std::optional<std::string>(witness), opts);
    } else if (*classify_cmd) {
      outcome = run_classify(dir, opts);
    } else if (*ext_cmd) {
      command += " " + ext.kind;
      ext.abelian_dim = abelian_dim;
      if (!ext_witness.empty()) ext.witness_path = ext_witness;
      outcome = run_extension(ext, opts);
    } else if (*catalog_cmd) {
      command += *list_cmd ? " list" : " show";
      outcome = *list_cmd ? run_catalog_list() : run_catalog_show(name, opts);
    } else if (*suite_cmd) {
      suite.seed = seed;
      suite.search.max_gl = max_gl;
      outcome = run_suite_command(suite);
    }
  } catch (const std::exception& err) {
    outcome = error_outcome(command, err);
    std::cerr << "leibalg " << command << ": " << err.what() << "\n";
  }
  std::cout << render(outcome.report, out_format);
  return outcome.exit;
}
