#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "pat/cli.hpp"

using pat::Json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json error_json() const { return Json::parse(err); }
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::vector<std::string> argv_storage = args;
  argv_storage.insert(argv_storage.begin(), "patience");
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = pat::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return CliResult{code, out.str(), err.str()};
}

const std::string kGoldenAlpha = R"({"T":3,"values":["1/2","12/25","91/250"]})";
const std::string kGoldenBeta = R"({"T":3,"values":["1","2/3","1/2"]})";

}  // namespace

TEST_CASE("patient subcommand on the golden pair") {
  auto res = run_cli({"patient", "--alpha", kGoldenAlpha, "--beta", kGoldenBeta});
  CHECK(res.code == 1);
  Json j = res.json();
  CHECK(j.at("holds") == false);
  CHECK(j.at("failing_index") == 2);
  CHECK(j.contains("witness"));
  CHECK(j.at("witness").at("x").at("T") == 3);
  CHECK(j.at("diagnostics").contains("ratio_gap"));
  CHECK(j.at("gap_report").at("adjacent_inf") == "125/87");

  // identical runs emit identical bytes
  auto again = run_cli({"patient", "--alpha", kGoldenAlpha, "--beta", kGoldenBeta});
  CHECK(res.out == again.out);
}

TEST_CASE("dominates subcommand") {
  auto res = run_cli({"dominates", "--x", R"({"T":2,"values":["1","1"]})", "--y",
                      R"({"T":2,"values":["1","1"]})"});
  CHECK(res.code == 0);
  CHECK(res.json().at("holds") == true);

  auto fail = run_cli({"dominates", "--x", R"({"T":2,"values":["0","1"]})", "--y",
                       R"({"T":2,"values":["1","0"]})"});
  CHECK(fail.code == 1);
  CHECK(fail.json().at("failure_index") == 1);
  CHECK(fail.json().at("witness_weights").at("values")[0] == "1");
}

TEST_CASE("superior subcommand") {
  auto res = run_cli({"superior", "--x", R"({"T":2,"values":["2","0"]})", "--y",
                      R"({"T":2,"values":["1","1"]})"});
  CHECK(res.code == 0);
}

TEST_CASE("tighten subcommand") {
  auto res = run_cli({"tighten", "--x", R"({"T":2,"values":["2","1"]})", "--y",
                      R"({"T":2,"values":["1","1"]})"});
  CHECK(res.code == 0);
  CHECK(res.json().at("x_tilde").at("values") == Json::array({"1", "1"}));

  auto bad = run_cli({"tighten", "--x", R"({"T":2,"values":["0","1"]})", "--y",
                      R"({"T":2,"values":["1","0"]})"});
  CHECK(bad.code == 2);
  CHECK(bad.error_json().at("error").at("code") == "invalid_input");
}

TEST_CASE("chain subcommand with a ratio trace") {
  auto res = run_cli({"chain", "--x", R"({"T":3,"values":["1","3/2","1"]})", "--y",
                      R"({"T":3,"values":["1","1","3/2"]})", "--alpha", kGoldenAlpha,
                      "--beta", kGoldenBeta});
  CHECK(res.code == 0);
  Json j = res.json();
  REQUIRE(j.at("steps").size() == 1);
  CHECK(j.at("steps")[0].at("from") == 2);
  CHECK(j.at("steps")[0].at("to") == 3);
  CHECK(j.at("steps")[0].at("amount") == "1/2");
  CHECK(j.at("sequences").size() == 2);
  CHECK(j.at("trace") == Json::array({"625/396", "3625/2289"}));
}

TEST_CASE("eval subcommand computes weighted sums") {
  auto res = run_cli({"eval", "--w", R"({"T":3,"values":["1","2/3","1/2"]})", "--x",
                      R"({"T":3,"values":["1","3/2","1"]})"});
  CHECK(res.code == 0);
  CHECK(res.json().at("value") == "5/2");
}

TEST_CASE("counterexample round-trips through eval") {
  auto ce = run_cli({"counterexample", "--alpha", kGoldenAlpha, "--beta", kGoldenBeta});
  CHECK(ce.code == 1);
  Json witness = ce.json().at("witness");
  auto eval = run_cli({"eval", "--alpha", kGoldenAlpha, "--beta", kGoldenBeta, "--x",
                       witness.at("x").dump(), "--y", witness.at("y").dump()});
  CHECK(eval.code == 1);  // the strict violation is reproduced
  CHECK(pat::parse_rational(eval.json().at("gap").get<std::string>()) > 0);

  auto held = run_cli({"counterexample", "--alpha", kGoldenBeta, "--beta", kGoldenBeta});
  CHECK(held.code == 0);
  CHECK(held.json().at("holds") == true);
}

TEST_CASE("serene subcommand") {
  auto res = run_cli({"serene", "--alpha", R"({"T":2,"values":["4/5","2/5"]})", "--beta",
                      R"({"T":2,"values":["1","1/2"]})"});
  CHECK(res.code == 0);
  auto fail = run_cli({"serene", "--alpha", R"({"T":2,"values":["1","1/2"]})", "--beta",
                       R"({"T":2,"values":["1/2","1/4"]})"});
  CHECK(fail.code == 1);
  CHECK(fail.json().at("witness").contains("y"));
}

TEST_CASE("families realize through --horizon") {
  auto res = run_cli({"patient", "--alpha", R"({"family":"exponential","a":"2/5"})", "--beta",
                      R"({"family":"exponential","a":"3/10"})", "--horizon", "3"});
  CHECK(res.code == 1);
  CHECK(res.json().at("failing_index") == 2);

  auto missing = run_cli({"patient", "--alpha", R"({"family":"exponential","a":"2/5"})",
                          "--beta", kGoldenBeta});
  CHECK(missing.code == 2);
}

TEST_CASE("patient with an infinite horizon on parametric pairs") {
  auto res = run_cli({"patient", "--alpha", R"({"family":"exponential","a":"9/10"})", "--beta",
                      R"({"family":"exponential","a":"1/2"})", "--horizon", "inf"});
  CHECK(res.code == 1);
  CHECK(res.json().at("failing_index") == 4);

  auto same = run_cli({"patient", "--alpha", R"({"family":"quasi_hyperbolic","b":"1/2","d":"1/2"})",
                       "--beta", R"({"family":"quasi_hyperbolic","b":"1/2","d":"1/2"})",
                       "--horizon", "inf"});
  CHECK(same.code == 0);

  auto mixed = run_cli({"patient", "--alpha", R"({"family":"exponential","a":"1/2"})", "--beta",
                        R"({"family":"quasi_hyperbolic","b":"1/2","d":"1/2"})", "--horizon",
                        "inf"});
  CHECK(mixed.code == 2);

  auto explicit_inf = run_cli({"serene", "--alpha", kGoldenAlpha, "--beta", kGoldenBeta,
                               "--horizon", "inf"});
  CHECK(explicit_inf.code == 2);
}

TEST_CASE("threshold and collapse subcommands") {
  auto thr = run_cli({"threshold", "--b", "1/2", "--T", "3"});
  CHECK(thr.code == 0);
  CHECK(thr.json().at("a_bar") == "1/2");

  auto col = run_cli({"collapse", "--a", "9/10", "--b", "1/2"});
  CHECK(col.code == 1);
  CHECK(col.json().at("t_dagger") == 4);
  CHECK(run_cli({"collapse", "--a", "1/2", "--b", "1/2"}).code == 0);
}

TEST_CASE("verify subcommand") {
  auto res = run_cli({"verify", "--suite", "relation", "--seed", "42", "--trials", "25",
                      "--tmax", "4", "--grid", "4"});
  CHECK(res.code == 0);
  Json j = res.json();
  CHECK(j.at("rng") == "splitmix64");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("pass") == true);
  REQUIRE(j.at("suites").size() == 1);
  CHECK(j.at("suites")[0].at("name") == "relation");
}

TEST_CASE("input errors exit with code 2 and an error object") {
  auto malformed = run_cli({"dominates", "--x", "{not json", "--y", "{}"});
  CHECK(malformed.code == 2);
  CHECK(malformed.error_json().at("error").at("code") == "parse_error");

  auto increasing = run_cli({"patient", "--alpha", R"({"T":2,"values":["1/2","1"]})", "--beta",
                             R"({"T":2,"values":["1","1/2"]})"});
  CHECK(increasing.code == 2);
  CHECK(increasing.error_json().at("error").at("code") == "invalid_input");

  auto mismatch = run_cli({"dominates", "--x", R"({"T":1,"values":["1"]})", "--y",
                           R"({"T":2,"values":["1","0"]})"});
  CHECK(mismatch.code == 2);

  auto usage = run_cli({"dominates", "--x", R"({"T":1,"values":["1"]})"});
  CHECK(usage.code == 2);
  CHECK(usage.error_json().at("error").at("code") == "usage");

  auto unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);
}

TEST_CASE("inputs from stdin and files, output to a file") {
  auto from_stdin = run_cli({"dominates", "--x", "-", "--y", R"({"T":2,"values":["1","0"]})"},
                            R"({"T":2,"values":["1","1"]})");
  CHECK(from_stdin.code == 0);

  std::string path = "cli_test_input.json";
  {
    std::ofstream f(path);
    f << R"({"T":2,"values":["1","1"]})";
  }
  auto from_file = run_cli({"dominates", "--x", "@" + path, "--y", "@" + path});
  CHECK(from_file.code == 0);
  std::remove(path.c_str());

  auto missing_file = run_cli({"dominates", "--x", "@does_not_exist.json", "--y", "{}"});
  CHECK(missing_file.code == 2);

  std::string out_path = "cli_test_output.json";
  auto to_file = run_cli({"--output", out_path, "patient", "--alpha", kGoldenAlpha, "--beta",
                          kGoldenBeta});
  CHECK(to_file.code == 1);
  CHECK(to_file.out.empty());
  {
    std::ifstream written(out_path);
    REQUIRE(written.good());
    Json j = Json::parse(written);
    CHECK(j.at("holds") == false);
  }
  std::remove(out_path.c_str());

  // --output is accepted after the subcommand too
  auto trailing = run_cli({"patient", "--alpha", kGoldenAlpha, "--beta", kGoldenBeta,
                           "--output", out_path});
  CHECK(trailing.code == 1);
  CHECK(trailing.out.empty());
  {
    std::ifstream written(out_path);
    REQUIRE(written.good());
    CHECK(Json::parse(written).at("holds") == false);
  }
  std::remove(out_path.c_str());
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).code == 0);
}
