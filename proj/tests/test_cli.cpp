#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

#include "doctest.h"
#include "support.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + ORIGAMIQ_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tpl(const std::string& name) { return testsupport::template_path(name); }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate command") {
  RunResult ok = run_cli("validate " + tpl("s4.json"));
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "result: ACCEPTED"));

  RunResult bad = run_cli("validate " + tpl("bad_sign.json"));
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "result: REJECTED"));
  CHECK(contains(bad.output, "same sign"));

  RunResult missing = run_cli("validate nosuchfile.json");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "cannot open"));
}

TEST_CASE("rr command") {
  RunResult zero = run_cli("rr " + tpl("s4.json"));
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.output, "character: 0"));
  CHECK(contains(zero.output, "dimension: 0"));

  RunResult simplex = run_cli("rr " + tpl("unit_simplex.json"));
  CHECK(simplex.exit_code == 0);
  CHECK(contains(simplex.output, "character: 1 + t2 + t1"));
  CHECK(contains(simplex.output, "dimension: 3"));
}

TEST_CASE("rr json breakdown") {
  RunResult r = run_cli("rr " + tpl("square.json") + " --json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["character"] == "1 + t2 + t1 + t1*t2");
  CHECK(doc["dimension"] == 4);
  REQUIRE(doc["per_polytope"].size() == 1);
  CHECK(doc["per_polytope"][0]["sign"] == "+");
  CHECK(doc["per_face"].size() == 9);  // 4 vertices + 4 edges + interior
  int dim_counts[3] = {0, 0, 0};
  for (const auto& jf : doc["per_face"]) ++dim_counts[jf["dim"].get<int>()];
  CHECK(dim_counts[0] == 4);
  CHECK(dim_counts[1] == 4);
  CHECK(dim_counts[2] == 1);
}

TEST_CASE("oracle command") {
  RunResult r = run_cli("oracle " + tpl("square.json") + " --direction 1,2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "direction: (1,2)"));
  CHECK(contains(r.output, "fixed-point sum: 1 + q + q^2 + q^3"));
  CHECK(contains(r.output, "lattice sum:     1 + q + q^2 + q^3"));
  CHECK(contains(r.output, "result: PASS"));

  // Automatic direction choice is echoed.
  RunResult auto_dir = run_cli("oracle " + tpl("square.json"));
  CHECK(auto_dir.exit_code == 0);
  CHECK(contains(auto_dir.output, "direction: (1,2)"));

  RunResult nongeneric = run_cli("oracle " + tpl("square.json") + " --direction 1,1");
  CHECK(nongeneric.exit_code == 2);
  CHECK(contains(nongeneric.output, "error:"));

  // Half-integral vertices: enumeration fallback still passes.
  RunResult folded = run_cli("oracle " + tpl("s4.json"));
  CHECK(folded.exit_code == 0);
  CHECK(contains(folded.output, "result: PASS"));
  CHECK(contains(folded.output, "non-integral"));
}

TEST_CASE("covering command") {
  RunResult r = run_cli("covering " + tpl("s4.json") + " --epsilon 1/8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "admissible: yes"));
  CHECK(contains(r.output, "(0,0) -> face dim=0"));
  CHECK(contains(r.output, "fold band points: 0"));
  CHECK(contains(r.output, "crack points: 0"));
  CHECK(contains(r.output, "reassembled: 0"));
  CHECK(contains(r.output, "fold normal model index: 0"));
  CHECK(contains(r.output, "audit: PASS"));

  RunResult inadmissible = run_cli("covering " + tpl("s4.json") + " --epsilon 2/3");
  CHECK(inadmissible.exit_code == 1);
  CHECK(contains(inadmissible.output, "admissible: no"));
  CHECK(contains(inadmissible.output, "audit: FAIL"));

  RunResult garbage = run_cli("covering " + tpl("s4.json") + " --epsilon abc");
  CHECK(garbage.exit_code == 2);

  // The default epsilon is the suggested admissible one.
  RunResult dflt = run_cli("covering " + tpl("s4.json"));
  CHECK(dflt.exit_code == 0);
  CHECK(contains(dflt.output, "audit: PASS"));
}

TEST_CASE("cylinder command") {
  RunResult r = run_cli("cylinder --t 0 --modes -5..5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "kernel W+: 0"));
  CHECK(contains(r.output, "kernel W-: 0"));
  CHECK(contains(r.output, "index: 0"));
  CHECK(contains(r.output, "result: PASS"));
  CHECK(contains(r.output, "m=0: W+ rates (-1/2 toward +inf, 1/2 toward -inf) not L2"));

  CHECK(run_cli("cylinder --t 10").exit_code == 0);
  CHECK(run_cli("cylinder --t -1").exit_code == 2);
  CHECK(run_cli("cylinder --modes 5..-5").exit_code == 2);
  CHECK(run_cli("cylinder --modes nonsense").exit_code == 2);

  RunResult js = run_cli("cylinder --t 1 --modes -2..2 --json");
  REQUIRE(js.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(js.output);
  CHECK(doc["index"] == 0);
  CHECK(doc["kernel_plus"] == 0);
  CHECK(doc["kernel_minus"] == 0);
  CHECK(doc["mode_certificates"].size() == 5);
  CHECK(doc["pass"] == true);
}

TEST_CASE("enumerate command") {
  RunResult r = run_cli("enumerate " + tpl("unit_simplex.json"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "(0,0)"));
  CHECK(contains(r.output, "(0,1)"));
  CHECK(contains(r.output, "(1,0)"));
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("rr").exit_code == 2);              // missing file argument
  CHECK(run_cli("rr --bogus x.json").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const std::string& args :
       {std::string("rr ") + tpl("square.json") + " --json",
        std::string("covering ") + tpl("s4.json"),
        std::string("oracle ") + tpl("hirzebruch.json"), std::string("cylinder --json")}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == 0);
  }
}
