#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "doctest.h"
#include "sfn/scenarios.hpp"

using namespace sfn;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> ids(const std::vector<ScenarioInfo>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.id);
  return out;
}

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("sfn_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const json& j) { std::ofstream(p) << j.dump(2) << "\n"; }

json golden(const std::string& scenario, const json& params, const std::vector<json>& checks) {
  json g = json::object();
  g["schema_version"] = 1;
  g["scenario"] = scenario;
  g["parameters"] = params;
  g["checks"] = checks;
  return g;
}

json check(const std::string& pointer, const json& expected) {
  return {{"cite", "test"}, {"pointer", pointer}, {"expected", expected}};
}

int cli(const std::string& args) {
  int st = std::system((std::string(SFN_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = scenario_registry();
  CHECK(reg.size() >= 10);
  for (const char* id : {"thm3.1", "thm3.2", "thm3.3-conformal", "thm3.3-reduced", "thm3.4-vect", "thm3.4-svect",
                         "thm3.4-k", "thm3.4-m", "symplectic-example", "grassmann-normalize",
                         "grassmann-pairwise-iso", "prolong-dims"}) {
    INFO(id);
    auto all = ids(reg);
    CHECK(std::find(all.begin(), all.end(), id) != all.end());
  }
  CHECK(ids(list_scenarios("minkowski")) == std::vector<std::string>{"thm3.3-conformal", "thm3.3-reduced"});
  CHECK(list_scenarios("no such thing [").size() == reg.size());
  CHECK(list_scenarios().size() == reg.size());
  auto schema = scenario_schema(reg.front());
  CHECK(schema["id"] == reg.front().id);
  CHECK(schema["params"].size() == reg.front().params.size());
}

TEST_CASE("parameters") {
  CHECK(parse_params({std::string("n=2"), std::string("variant=Pi")}) == Params{{"n", "2"}, {"variant", "Pi"}});
  CHECK_THROWS_AS(parse_params({"n"}), ScenarioError);
  CHECK_THROWS_AS(parse_params({"=3"}), ScenarioError);
  const auto info = list_scenarios("thm3.2").front();
  auto p = resolve_params(info, {{"n", "3"}});
  CHECK(p["n"] == 3);
  CHECK(p["variant"] == "J");
  CHECK_THROWS_AS(resolve_params(info, {{"n", "4"}}), ScenarioError);
  CHECK_THROWS_AS(resolve_params(info, {{"n", "two"}}), ScenarioError);
  CHECK_THROWS_AS(resolve_params(info, {{"n", "2x"}}), ScenarioError);
  CHECK_THROWS_AS(resolve_params(info, {{"variant", "K"}}), ScenarioError);
  CHECK_THROWS_AS(resolve_params(info, {{"colour", "red"}}), ScenarioError);
  CHECK_THROWS_AS(run_scenario("thm9.9", {}), ScenarioError);
  CHECK_THROWS_AS(run_scenario("thm3.1", {{"n", "3"}, {"m", "3"}}), ScenarioError);
}

TEST_CASE("reports") {
  auto r = run_scenario("thm3.1", {{"n", "1"}, {"m", "0"}});
  CHECK(r.status == RunStatus::Ok);
  CHECK(r.report["schema_version"] == kReportSchema);
  CHECK(r.report["status"] == "ok");
  for (const auto& [d, h] : r.report["summary"]["h2_dims"].items()) CHECK(h == 0);
  CHECK(run_exit_code(r, {}) == kExitOk);
  CHECK(!r.report.contains("wall_clock_seconds"));

  auto k = run_scenario("thm3.4-k", {{"n", "1"}});
  CHECK(k.report["summary"]["h2_total"] == 0);

  auto g = run_scenario("grassmann-normalize", {{"n", "4"}, {"seed", "11"}});
  CHECK(g.report["generators"].size() == 4);
  CHECK(g.report["log"].size() == 3);
  CHECK(g.report["summary"]["generators_fixed"] == true);
  CHECK(g.report["summary"]["monomial_span"] == 16);
  CHECK_THROWS_AS(run_scenario("grassmann-normalize", {{"n", "3"}, {"structure", "tr"}}), ScenarioError);

  auto text = render_text(k.report);
  CHECK(text.find("scenario thm3.4-k") != std::string::npos);
  CHECK(text.find("status ok") != std::string::npos);

  auto timed = run_scenario("thm3.4-k", {{"n", "1"}}, {300, true});
  CHECK(timed.report.contains("wall_clock_seconds"));
}

TEST_CASE("reports are byte-identical across runs") {
  for (auto [id, p] : std::vector<std::pair<std::string, Params>>{
           {"thm3.3-reduced", {}},
           {"grassmann-pairwise-iso", {{"n", "3"}, {"pairs", "3"}, {"seed", "9"}}},
           {"symplectic-example", {{"dim", "4"}, {"seed", "3"}}},
           {"thm3.2", {{"n", "2"}, {"variant", "Pi"}}}}) {
    INFO(id);
    CHECK(run_scenario(id, p).report.dump(2) == run_scenario(id, p).report.dump(2));
  }
}

TEST_CASE("soft budget gives a partial report") {
  auto r = run_scenario("thm3.2", {{"n", "3"}}, {1e-9, false});
  CHECK(r.status == RunStatus::Partial);
  CHECK(r.report["status"] == "partial");
  CHECK(run_exit_code(r, {}) == kExitComputation);
}

TEST_CASE("golden comparison") {
  auto r = run_scenario("thm3.4-k", {{"n", "2"}});
  auto ok = compare_golden(golden("thm3.4-k", {{"n", 2}}, {check("/summary/h2_total", 4)}), r.report);
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].pass);
  CHECK(run_exit_code(r, ok) == kExitOk);
  auto bad = compare_golden(
      golden("thm3.4-k", {{"n", 2}}, {check("/summary/h2_total", 5), check("/summary/nothing_here", 1)}), r.report);
  CHECK(!bad[0].pass);
  CHECK(bad[0].present);
  CHECK(bad[0].computed == 4);
  CHECK(!bad[1].present);
  CHECK(run_exit_code(r, bad) == kExitMismatch);
}

TEST_CASE("regression over a golden directory") {
  auto dir = scratch_dir("regress");
  write(dir / "k1.json", golden("thm3.4-k", {{"n", 1}}, {check("/summary/h2_total", 0)}));
  write(dir / "k2.json", golden("thm3.4-k", {{"n", 2}}, {check("/summary/h2_total", 4), check("/summary/h2_dims/0", 4)}));
  json index = json::object();
  index["schema_version"] = 1;
  index["suites"]["k"] = {"k1.json", "k2.json"};
  write(dir / "index.json", index);
  auto all = regress_goldens(dir, "all");
  CHECK(all.exit_code == kExitOk);
  CHECK(all.rows.size() == 3);
  CHECK(regress_goldens(dir, "k").exit_code == kExitOk);
  CHECK_THROWS_AS(regress_goldens(dir, "nope"), ScenarioError);

  // injected wrong dimension: that row fails, the others pass
  write(dir / "k2.json", golden("thm3.4-k", {{"n", 2}}, {check("/summary/h2_total", 5), check("/summary/h2_dims/0", 4)}));
  auto inj = regress_goldens(dir, "all");
  CHECK(inj.exit_code == kExitMismatch);
  REQUIRE(inj.rows.size() == 3);
  CHECK(inj.rows[0].status == "pass");
  CHECK(inj.rows[1].status == "FAIL");
  CHECK(inj.rows[2].status == "pass");
  auto text = render_regress(inj);
  CHECK(text.find("expected 5, computed 4") != std::string::npos);

  // known failures count only without allow_known
  json kf = golden("thm3.4-k", {{"n", 2}}, {check("/summary/h2_total", 5)});
  kf["checks"][0]["known_failure"] = "test";
  write(dir / "k2.json", kf);
  CHECK(regress_goldens(dir, "all").exit_code == kExitMismatch);
  auto allowed = regress_goldens(dir, "all", {}, true);
  CHECK(allowed.exit_code == kExitOk);
  CHECK(allowed.rows[1].status == "known-fail");

  fs::remove(dir / "k2.json");
  auto miss = regress_goldens(dir, "all");
  CHECK(miss.exit_code == kExitMismatch);
  CHECK(miss.rows.back().status == "missing");

  CHECK(regress_goldens(dir / "absent", "all").exit_code == kExitMismatch);
  fs::remove_all(dir);
}

TEST_CASE("command line exit codes") {
  auto dir = scratch_dir("cli");
  CHECK(cli("list") == kExitOk);
  CHECK(cli("list minkowski --json") == kExitOk);
  CHECK(cli("run thm3.1 -p n=1 -p m=0 --out " + (dir / "r.json").string()) == kExitOk);
  std::ifstream in(dir / "r.json");
  CHECK(json::parse(in)["scenario"] == "thm3.1");
  CHECK(cli("run thm9.9") == kExitUsage);
  CHECK(cli("run thm3.1 -p n=9") == kExitUsage);
  CHECK(cli("frobnicate") == kExitUsage);
  CHECK(cli("run thm3.2 -p n=3 --budget 0.000000001") == kExitComputation);
  write(dir / "g.json", golden("thm3.4-k", {{"n", 1}}, {check("/summary/h2_total", 1)}));
  CHECK(cli("run thm3.4-k -p n=1 --golden " + (dir / "g.json").string()) == kExitMismatch);
  CHECK(cli("run thm3.4-k -p n=1 --golden " + (dir / "none.json").string()) == kExitMismatch);
  fs::remove_all(dir);
}
