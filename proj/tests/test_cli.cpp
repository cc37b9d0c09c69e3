#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string out_file =
      (fs::temp_directory_path() / "syninfo_cli_out.txt").string();
  const std::string cmd =
      std::string(SYNINFO_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  CommandResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  res.output = buf.str();
  return res;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

void write_xor_fixture(const fs::path& path) {
  std::ofstream out(path);
  out << R"({"cardinalities":[2,2,2],
             "probs":[0.25,0,0,0.25,0,0.25,0.25,0]})";
}

void write_wxy_fixture(const fs::path& path) {
  std::ofstream out(path);
  out << R"({"cardinalities":[2,2,2],
             "probs":[0.125,0.125,0.125,0.125,0.125,0.125,0.125,0.125]})";
}

}  // namespace

TEST_CASE("gen writes a deterministic distribution") {
  const auto f1 = temp_file("gen1.json");
  const auto f2 = temp_file("gen2.json");
  auto r1 = run_cli("gen --vars 2 --states 3 --seed 7 --out " + f1.string());
  auto r2 = run_cli("gen --vars 2 --states 3 --seed 7 --out " + f2.string());
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  std::ifstream a(f1), b(f2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  const auto j = nlohmann::json::parse(sa.str());
  CHECK(j["cardinalities"] == nlohmann::json({3, 3}));
  CHECK(j["probs"].size() == 9);
}

TEST_CASE("measure reproduces the gate-table quantities") {
  const auto fixture = temp_file("xor.json");
  write_xor_fixture(fixture);
  auto res = run_cli("measure --in " + fixture.string() +
                     " --mi 0:2 --mi 0,1:2 --entropy 2 --format json");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  REQUIRE(j.size() == 3);
  // Results are grouped by measure kind: entropy first, then the MIs in
  // the order given.
  CHECK(j[0]["value"].get<double>() == doctest::Approx(1.0));  // H(Y)
  CHECK(std::abs(j[1]["value"].get<double>()) <= 1e-12);       // I(X1:Y)
  CHECK(j[2]["value"].get<double>() == doctest::Approx(1.0));  // I(X1,X2:Y)
}

TEST_CASE("find-srv emits a successful result on the uniform pair") {
  const auto fixture = temp_file("uniform22.json");
  {
    std::ofstream out(fixture);
    out << R"({"cardinalities":[2,2],"probs":[0.25,0.25,0.25,0.25]})";
  }
  const auto appended = temp_file("uniform22_srv.json");
  auto res = run_cli("find-srv --in " + fixture.string() +
                     " --inputs 0,1 --seed 5 --append-out " +
                     appended.string());
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["succeeded"].get<bool>());
  CHECK(j["mi_with_x"].get<double>() == doctest::Approx(1.0).epsilon(0.05));
  std::ifstream ext_in(appended);
  const auto extended = nlohmann::json::parse(ext_in);
  CHECK(extended["cardinalities"].size() == 3);
}

TEST_CASE("the append-redundant synergy flow runs end to end") {
  const auto dist = temp_file("gen_ab.json");
  auto gen = run_cli("gen --vars 2 --states 3 --seed 7 --out " + dist.string());
  REQUIRE(gen.exit_code == 0);
  auto res = run_cli("synergy --in " + dist.string() +
                     " --inputs 0,1 --target append-redundant --seed 3 "
                     "--restarts 6");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["target"] == nlohmann::json({2}));
  CHECK(j["mid"].get<double>() >= -1e-9);
  CHECK(j.contains("whole_minus_sum"));
}

TEST_CASE("synergy on the gate table finds the bit") {
  const auto fixture = temp_file("xor2.json");
  write_xor_fixture(fixture);
  auto res = run_cli("synergy --in " + fixture.string() +
                     " --inputs 0,1 --target 2 --seed 11");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["mid"].get<double>() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("decompose converges on the shared-bit fixture") {
  const auto fixture = temp_file("wxy.json");
  write_wxy_fixture(fixture);
  auto res = run_cli("decompose --in " + fixture.string() +
                     " --b 0,2 --a 0,1 --perp-states 2 --par-states 2 "
                     "--seed 31");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["converged"].get<bool>());
}

TEST_CASE("fig2 produces the documented csv schema") {
  const auto out = temp_file("fig2.csv");
  auto res = run_cli(
      "fig2 --trials 3 --states 2 --seed 9 --restarts 3 --max-iters 400 "
      "--out " +
      out.string());
  REQUIRE(res.exit_code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "states,trials,success_rate,err_q25,err_median,err_q75");
}

TEST_CASE("oracle census reports the xor classes") {
  auto res = run_cli("oracle-census");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["found_three_xors"].get<bool>());
  CHECK(j["selected"].size() >= 4);
}

TEST_CASE("exit codes distinguish usage from domain errors") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("gen --vars 0").exit_code == 2);
  CHECK(run_cli("measure --in /nonexistent.json --mi 0:1").exit_code == 1);
  const auto fixture = temp_file("xor3.json");
  write_xor_fixture(fixture);
  CHECK(run_cli("measure --in " + fixture.string() + " --mi 0x:1").exit_code ==
        2);
  CHECK(run_cli("measure --in " + fixture.string() + " --mi 0:9").exit_code ==
        1);
}
