#pragma once

// Registry of reproducible computations, their JSON reports, and comparison
// of reports against golden tables.

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sfn/algebra.hpp"

namespace sfn {

inline constexpr int kReportSchema = 1;

// Unknown scenario or bad parameters.
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParamSpec {
  std::string name;
  std::string help;
  std::string fallback;               // default value, as text
  std::vector<std::string> choices;   // empty for integers
  long lo = 0, hi = 0;                // integer range when choices is empty
};

struct ScenarioInfo {
  std::string id;
  std::string summary;
  std::vector<ParamSpec> params;
};

using Params = std::map<std::string, std::string>;

const std::vector<ScenarioInfo>& scenario_registry();
// Entries whose id or summary contains `filter`, ignoring case; everything
// when nothing matches.
std::vector<ScenarioInfo> list_scenarios(const std::string& filter = "");
nlohmann::json scenario_schema(const ScenarioInfo& s);

// Parses "k=v" strings; throws ScenarioError on malformed input.
Params parse_params(const std::vector<std::string>& kv);
// Fills defaults and validates; the result maps every parameter to its value.
nlohmann::json resolve_params(const ScenarioInfo& s, const Params& given);

struct RunOptions {
  double budget_seconds = 300;
  bool timing = false;  // adds wall-clock time, which breaks byte identity
};

enum class RunStatus { Ok, Partial, Error };

struct RunResult {
  nlohmann::json report;
  RunStatus status = RunStatus::Ok;
};

// Throws ScenarioError for unknown ids and invalid parameters; computational
// failures are reported inside the result with status Error.
RunResult run_scenario(const std::string& id, const Params& params, const RunOptions& opt = {});

// Text rendering of a report.
std::string render_text(const nlohmann::json& report);

// A golden file holds checks {cite, pointer, expected} against the report of
// one scenario run.
struct GoldenRow {
  std::string cite;
  std::string pointer;
  nlohmann::json expected, computed;
  bool pass = false;
  bool present = false;
};
std::vector<GoldenRow> compare_golden(const nlohmann::json& golden, const nlohmann::json& report);

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0, kExitUsage = 1, kExitMismatch = 2, kExitComputation = 3;

// 0, kExitComputation for partial or failed runs, kExitMismatch when a golden
// check fails or points at nothing.
int run_exit_code(const RunResult& r, const std::vector<GoldenRow>& rows);

// One row per golden check. A golden directory holds index.json mapping suite
// names to golden files; each file names a scenario, its parameters and the
// checks. Checks may carry "known_failure" with the reason the build
// disagrees; those count as failures unless allow_known is set.
struct RegressRow {
  std::string suite, file, scenario, cite, pointer;
  std::string status;  // pass, FAIL, known-fail, missing, error
  nlohmann::json expected, computed;
};
struct RegressResult {
  std::vector<RegressRow> rows;
  int exit_code = kExitOk;
};
// suite is "all" or a suite name; throws ScenarioError for unknown suites.
RegressResult regress_goldens(const std::filesystem::path& dir, const std::string& suite, const RunOptions& opt = {},
                              bool allow_known = false);
std::string render_regress(const RegressResult& r);

// Graded algebras used by the cohomology scenarios at their default
// parameters, for property gates.
std::vector<std::pair<std::string, LieSuperAlgebra<Rational>>> scenario_algebras();

}  // namespace sfn
