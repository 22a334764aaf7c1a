#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"

using sally::cli::run_cli;
using Json = nlohmann::ordered_json;

namespace {

Json json_of(const std::vector<std::string>& args) {
  auto r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("invariants") {
  auto doc = json_of({"invariants", "--e", "6", "--m", "3", "--format", "json"});
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "invariants");
  const auto& row = doc["rows"].at(0);
  CHECK(row["F_def"] == 9);
  CHECK(row["type_def"] == 3);
  CHECK(row["PF_def"] == Json::array({4, 5, 9}));
  CHECK(row["match"] == true);

  auto sweep = json_of({"invariants", "--e-range", "6..8", "--all-mn", "--format", "json"});
  CHECK(sweep["rows"].size() == 10 + 15 + 21);
  for (const auto& r : sweep["rows"]) CHECK(r["match"] == true);

  auto bad = run_cli({"invariants", "--e", "5", "--m", "1", "--n", "2"});
  CHECK(bad.exit_code == sally::cli::kExitUsage);
  CHECK(bad.err.find("e >= 6") != std::string::npos);
}

TEST_CASE("betti") {
  auto s1 = json_of({"betti", "--e", "7", "--m", "1", "--format", "json"});
  CHECK(s1["params"]["totals"] == Json::array({1, 14, 35, 35, 14, 1}));
  CHECK(s1["params"]["match"] == true);

  auto s34 = json_of({"betti", "--e", "7", "--m", "3", "--n", "4", "--format", "json"});
  CHECK(s34["params"]["totals"] == Json::array({1, 10, 20, 15, 4}));
  CHECK(s34["params"]["match"] == true);

  auto s24 = json_of({"betti", "--e", "6", "--m", "2", "--n", "4", "--format", "json"});
  CHECK(s24["params"]["totals"] == Json::array({1, 6, 8, 3}));
  CHECK(s24["params"]["family"].is_null());
  CHECK(s24["params"]["match"].is_null());
  CHECK(s24["rows"].at(1)["closed_form"].is_null());

  auto gens = json_of({"betti", "--gens", "3,4,5", "--format", "json"});
  CHECK(gens["params"]["totals"] == Json::array({1, 3, 2}));

  // A cutoff below the top shift leaves nonzero Betti numbers in the tail window.
  auto cut = run_cli({"betti", "--e", "7", "--m", "1", "--lambda-max", "30", "--format", "json"});
  CHECK(cut.exit_code == sally::cli::kExitMismatch);
  CHECK(Json::parse(cut.out)["params"]["lambda_max"] == 30);
  CHECK(Json::parse(cut.out)["params"]["tail_window_zero"] == false);
  auto wide = json_of({"betti", "--e", "7", "--m", "1", "--lambda-max", "120", "--format", "json"});
  CHECK(wide["params"]["totals"] == s1["params"]["totals"]);

  CHECK(run_cli({"betti", "--e", "7"}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"betti", "--gens", "4,6"}).exit_code == sally::cli::kExitUsage);
}

TEST_CASE("verify-gens") {
  auto m2 = json_of({"verify-gens", "--e", "7", "--m", "2", "--format", "json"});
  CHECK(m2["params"]["claimed_count"] == 15);
  CHECK(m2["params"]["generates"] == true);
  CHECK(m2["params"]["minimal"] == true);

  auto f23 = json_of({"verify-gens", "--e", "8", "--family", "23", "--format", "json"});
  CHECK(f23["params"]["claimed_count"] == 14);
  CHECK(f23["params"]["minimal"] == true);

  auto f34 = json_of({"verify-gens", "--e", "7", "--family", "34", "--format", "json"});
  CHECK(f34["params"]["claimed_count"] == 10);
  CHECK(f34["params"]["generates"] == true);
  for (const auto& row : f34["rows"]) CHECK(row["match"] == true);

  CHECK(run_cli({"verify-gens", "--e", "7", "--family", "45"}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"verify-gens", "--e", "7", "--m", "2", "--family", "23"}).exit_code == sally::cli::kExitUsage);
}

TEST_CASE("scan") {
  auto r = run_cli({"scan", "--conjecture", "1", "--e", "8", "--format", "csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("conjecture,e,params,j,relation,lhs,rhs,verdict\n", 0) == 0);
  CHECK(r.out.find(",fails\n") != std::string::npos);
  CHECK(r.err.find("conjecture 1 e=8:") != std::string::npos);

  auto all = run_cli({"scan", "--conjecture", "all", "--e-range", "6..7", "--format", "csv"});
  CHECK(all.exit_code == 0);
  std::istringstream lines(all.err);
  int count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  CHECK(count == 10);

  CHECK(run_cli({"scan", "--conjecture", "6", "--e", "8"}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"scan", "--conjecture", "1", "--e", "8", "--e-range", "6..7"}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"scan", "--conjecture", "1", "--e-range", "9..7"}).exit_code == sally::cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"invariants", "--e", "7", "--m", "2", "--format", "xml"}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"invariants", "--e", "x", "--m", "2"}).exit_code == sally::cli::kExitUsage);
  CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_CASE("CSV quoting") {
  CHECK(sally::cli::csv_field("plain") == "plain");
  CHECK(sally::cli::csv_field("a,b") == "\"a,b\"");
  CHECK(sally::cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  auto r = run_cli({"invariants", "--e", "6", "--m", "3", "--format", "csv"});
  CHECK(r.out.find(",\"4;5;9\",\"4;5;9\",") != std::string::npos);
}

TEST_CASE("JSON output round-trips") {
  const std::vector<std::vector<std::string>> commands{
      {"invariants", "--e-range", "6..7", "--all-m", "--all-mn", "--format", "json"},
      {"betti", "--e", "8", "--m", "4", "--format", "json"},
      {"verify-gens", "--e", "7", "--m", "3", "--format", "json"},
      {"scan", "--conjecture", "5", "--e", "8", "--format", "json"}};
  for (const auto& args : commands) {
    const auto out = run_cli(args).out;
    CHECK(Json::parse(out).dump(2) + "\n" == out);
  }
}

TEST_CASE("--out writes the report and output does not depend on --jobs") {
  const std::string path = "cli_test_out.csv";
  auto r = run_cli({"scan", "--conjecture", "2", "--e", "8", "--format", "csv", "--out", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("conjecture 2 e=8:") != std::string::npos);
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == run_cli({"scan", "--conjecture", "2", "--e", "8", "--format", "csv"}).out);
  std::remove(path.c_str());

  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"invariants", "--e-range", "6..9", "--all-mn"},
                                             {"betti", "--e", "9", "--m", "4"},
                                             {"verify-gens", "--e", "8", "--m", "5", "--format", "csv"},
                                             {"scan", "--conjecture", "all", "--e", "8", "--format", "json"}}) {
    auto one = args, eight = args;
    one.insert(one.end(), {"--jobs", "1"});
    eight.insert(eight.end(), {"--jobs", "8"});
    const auto a = run_cli(one), b = run_cli(eight);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
