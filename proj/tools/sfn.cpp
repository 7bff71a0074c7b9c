// Command line runner: run a scenario, list the registry, regress goldens.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sfn/scenarios.hpp"

#ifndef SFN_GOLDEN_DIR
#define SFN_GOLDEN_DIR "goldens"
#endif

using namespace sfn;
using json = nlohmann::json;

namespace {

int cmd_run(const std::string& id, const std::vector<std::string>& kv, const std::string& out,
            const std::string& golden, const RunOptions& opt, bool as_json) {
  auto res = run_scenario(id, parse_params(kv), opt);
  std::vector<GoldenRow> rows;
  if (!golden.empty()) {
    std::ifstream in(golden);
    if (!in) {
      std::cerr << "golden " << golden << ": missing\n";
      return kExitMismatch;
    }
    rows = compare_golden(json::parse(in), res.report);
  }
  const std::string text = res.report.dump(2) + "\n";
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
  std::cout << (as_json ? text : render_text(res.report));
  for (const auto& r : rows) {
    std::cout << (r.pass ? "pass    " : r.present ? "FAIL    " : "missing ") << r.pointer;
    if (!r.cite.empty()) std::cout << "  [" << r.cite << "]";
    if (!r.pass) std::cout << "  expected " << r.expected.dump() << ", computed " << r.computed.dump();
    std::cout << "\n";
  }
  return run_exit_code(res, rows);
}

int cmd_list(const std::string& filter, bool as_json) {
  auto found = list_scenarios(filter);
  if (as_json) {
    json j = json::array();
    for (const auto& s : found) j.push_back(scenario_schema(s));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& s : found) {
    std::cout << s.id << "\n  " << s.summary << "\n";
    for (const auto& p : s.params) {
      std::cout << "    " << p.name << " = " << p.fallback;
      if (p.choices.empty())
        std::cout << "  [" << p.lo << ".." << p.hi << "]";
      else
        for (std::size_t i = 0; i < p.choices.size(); ++i) std::cout << (i ? "|" : "  {") << p.choices[i];
      if (!p.choices.empty()) std::cout << "}";
      std::cout << "  " << p.help << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure functions of G-structures on supermanifolds"};
  app.require_subcommand(1);

  std::string id, out, golden, filter, suite = "all", dir = SFN_GOLDEN_DIR;
  std::vector<std::string> kv;
  RunOptions opt;
  bool as_json = false, allow_known = false;

  auto* run = app.add_subcommand("run", "run one scenario");
  run->add_option("scenario", id, "scenario id")->required();
  run->add_option("--param,-p", kv, "parameter k=v");
  run->add_option("--out,-o", out, "write the JSON report here");
  run->add_option("--golden,-g", golden, "compare against this golden file");
  run->add_option("--budget", opt.budget_seconds, "soft time budget in seconds")->check(CLI::PositiveNumber);
  run->add_flag("--timing", opt.timing, "record wall-clock time in the report");
  run->add_flag("--json", as_json, "print the JSON report instead of text");

  auto* list = app.add_subcommand("list", "list scenarios and their parameters");
  list->add_option("filter", filter, "substring of id or summary");
  list->add_flag("--json", as_json, "print parameter schemas as JSON");

  auto* regress = app.add_subcommand("regress", "compare scenario reports with golden tables");
  regress->add_option("suite", suite, "suite name or all");
  regress->add_option("--dir", dir, "golden directory");
  regress->add_option("--budget", opt.budget_seconds, "soft time budget per run in seconds")
      ->check(CLI::PositiveNumber);
  regress->add_flag("--allow-known", allow_known, "do not count checks marked as known failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(id, kv, out, golden, opt, as_json);
    if (*list) return cmd_list(filter, as_json);
    auto res = regress_goldens(dir, suite, opt, allow_known);
    std::cout << render_regress(res);
    return res.exit_code;
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}
