// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
//   acceptance [--only N] [--seed S] [--cli PATH]
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "leibalg/suite.hpp"

using namespace leibalg;

namespace {

struct Captured {
  std::string out;
  int exit = -1;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(pipe);
  c.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

CriterionResult check_determinism(const std::string& cli, std::uint64_t seed) {
  CriterionResult r;
  r.id = 9;
  r.name = "suite reports are byte-identical across runs";
  const auto start = std::chrono::steady_clock::now();
  const std::string command = "'" + cli + "' --seed " + std::to_string(seed) + " suite 2>/dev/null";
  const auto first = capture(command), second = capture(command);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checked = 2;
  r.failures = (first.out != second.out) + (first.exit != second.exit);
  r.passed = r.failures == 0 && !first.out.empty() && first.exit >= 0;
  r.details = Json{{"bytes", first.out.size()}, {"exit", first.exit}};
  return r;
}

void print(const CriterionResult& r) {
  std::cout << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (checks " << r.checked
            << ", failures " << r.failures << ", " << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
  if (r.id == 4) {
    const auto& d = r.details;
    std::cout << "    abelian " << d["abelian"] << ", in zero class " << d["in_zero_class"] << ", non-abelian in zero class "
              << d["non_abelian_in_zero_class"] << ", abelian outside " << d["abelian_outside_zero_class"] << "\n"
              << "    reading 'abelian' as [g,g]_Lie = 0: " << d["trivial_lie_commutator_reading_failures"] << " failures\n";
  }
  if (!r.passed && r.details.contains("failed_checks"))
    for (const auto& f : r.details["failed_checks"]) std::cout << "    failed: " << f.get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  SuiteConfig config;
  std::string cli = LEIBALG_CLI_PATH;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i], value = argv[i + 1];
    if (flag == "--only") only = std::stoi(value);
    else if (flag == "--seed") config.seed = std::stoull(value);
    else if (flag == "--cli") cli = value;
    else {
      std::cerr << "unknown flag " << flag << "\n";
      return 64;
    }
  }
  const auto wanted = [&](int id) { return !only || *only == id; };

  std::vector<CriterionResult> results;
  const auto timed = [&](int id, const std::function<CriterionResult()>& f) {
    if (!wanted(id)) return;
    const auto start = std::chrono::steady_clock::now();
    auto r = f();
    if (r.seconds == 0) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print(r);
    results.push_back(std::move(r));
  };
  timed(1, check_example_values);
  timed(2, check_example_witness);
  std::optional<SuiteData> data;
  if (!only || (*only >= 3 && *only <= 8)) data = prepare_suite(config);
  timed(3, [&] { return check_equivalence(*data); });
  timed(4, [&] { return check_abelian_class(*data); });
  timed(5, [&] { return check_natural(*data); });
  timed(6, [&] { return check_pullbacks(*data); });
  timed(7, [&] { return check_sequences(*data); });
  timed(8, [&] { return check_commutator_kernels(*data); });
  timed(9, [&] { return check_determinism(cli, config.seed); });

  if (results.empty()) {
    std::cerr << "no criterion " << *only << "\n";
    return 64;
  }
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  return all ? 0 : 1;
}
