// End-to-end tests of the command-line binary: every fixture file must run
// clean under --oracle, the failure exits must fire, and reports must be
// deterministic and re-parseable.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corecalc/json_io.hpp"
#include "doctest.h"
#include "helpers.hpp"

namespace {

namespace fs = std::filesystem;

const std::string kBin = CLI_BIN;
const fs::path kFixtures = FIXTURE_DIR;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "corecalc_cli_out.txt";
  const fs::path err = fs::temp_directory_path() / "corecalc_cli_err.txt";
  const std::string cmd = kBin + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(kFixtures)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

Json report_for(const fs::path& fixture, const std::string& flags = "--oracle") {
  const fs::path rpt = fs::temp_directory_path() / "corecalc_cli_report.json";
  const RunResult r = run_cli("run " + fixture.string() + " " + rpt.string() + " " + flags);
  REQUIRE_MESSAGE(r.exit_code == 0, fixture.string(), ": ", r.err);
  return Json::parse(slurp(rpt));
}

}  // namespace

TEST_CASE("every fixture runs clean under the oracle") {
  const std::vector<fs::path> files = fixture_files();
  REQUIRE(files.size() >= 40);  // the worked-example corpus
  for (const fs::path& f : files) {
    CAPTURE(f.string());
    const Json report = report_for(f);
    const Json& summary = report["summary"];
    CHECK(summary["expect_failures"].get<int>() == 0);
    CHECK(summary["qc_violations"].get<int>() == 0);
    CHECK(summary["oracle_disagreements"].get<int>() == 0);
    for (const Json& q : report["queries"]) {
      if (q.contains("expect_pass")) CHECK(q["expect_pass"].get<bool>());
    }
  }
}

TEST_CASE("an undefined object name exits 2 and is named in the diagnostic") {
  const fs::path rpt = fs::temp_directory_path() / "corecalc_cli_r2.json";
  const RunResult r =
      run_cli("run " + (kFixtures / "failing" / "undefined_object.json").string() + " " +
              rpt.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("Omega3") != std::string::npos);
}

TEST_CASE("a corrupted right-hand side trips exit 1") {
  const fs::path rpt = fs::temp_directory_path() / "corecalc_cli_r1.json";
  const RunResult r =
      run_cli("run " + (kFixtures / "failing" / "corrupted_rhs.json").string() + " " +
              rpt.string());
  CHECK(r.exit_code == 1);
  const Json report = Json::parse(slurp(rpt));
  CHECK(report["summary"]["qc_violations"].get<int>() == 1);
  const Json& rule = report["queries"][0]["result"]["rule"];
  CHECK(rule["qc_satisfied"].get<bool>());
  CHECK_FALSE(rule["equal"].get<bool>());
}

TEST_CASE("require-qc turns an unqualified rule into exit 3") {
  const fs::path fixture = kFixtures / "intersection_rule_halfplanes.json";
  const fs::path rpt = fs::temp_directory_path() / "corecalc_cli_r3.json";
  CHECK(run_cli("run " + fixture.string() + " " + rpt.string()).exit_code == 0);
  CHECK(run_cli("run " + fixture.string() + " " + rpt.string() + " --require-qc").exit_code == 3);
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  const fs::path fixture = kFixtures / "normal_cone_square_corner.json";
  Json a = report_for(fixture);
  Json b = report_for(fixture);
  a.erase("generated_at");
  b.erase("generated_at");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("sets printed in a report re-parse to equal sets") {
  const Json report = report_for(kFixtures / "normal_cone_square_corner.json");
  const Polyhedron back = polyhedron_from_json(report["queries"][0]["result"]["set"]);
  const Polyhedron quadrant = B{2}.le({-1, 0}, 0).le({0, -1}, 0).p();
  CHECK(set_equal(back, quadrant));

  const Json rule_report = report_for(kFixtures / "intersection_rule_quadrant.json");
  const Json& rule = rule_report["queries"][0]["result"]["rule"];
  CHECK(set_equal(polyhedron_from_json(rule["lhs"]), polyhedron_from_json(rule["rhs"])));
}

TEST_CASE("fuzz subcommand honors its documented exits") {
  CHECK(run_cli("fuzz 1 50 --seed 7 --out-dir /tmp/corecalc_fz_a").exit_code == 0);
  const RunResult big = run_cli("fuzz 2 200 --seed 42 --out-dir /tmp/corecalc_fz_b");
  CHECK(big.exit_code == 0);
  // The summary must show the conclusion held exactly as often as the
  // hypothesis did, for every campaign.
  CHECK(big.out.find("campaign") != std::string::npos);

  const RunResult none = run_cli("fuzz 2 0 --seed 1 --out-dir /tmp/corecalc_fz_c");
  CHECK(none.exit_code == 0);
  CHECK(none.out.find("normal_intersection") != std::string::npos);
}
