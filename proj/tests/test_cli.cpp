#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ph/cli.hpp"
#include "ph/kernel.hpp"
#include "ph/trig_poly.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& argv) {
  std::ostringstream out, err;
  const int code = ph::cli::run(argv, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("partitions table csv with both oracles") {
  const auto result = run_cli({"partitions", "table", "--max", "10", "--oracle", "both",
                               "--format", "csv"});
  CHECK(result.exit_code == 0);
  const auto lines = split_lines(result.out);
  REQUIRE(lines.size() == 12);  // header + 11 data rows
  CHECK(lines[0] == "n,euler,enumeration");
  CHECK(lines[1] == "0,1,1");
  CHECK(lines[11] == "10,42,42");
}

TEST_CASE("kernel expand text matches the printed layout") {
  const auto result = run_cli({"kernel", "expand", "--s", "2", "--format", "text"});
  CHECK(result.exit_code == 0);
  CHECK(result.out == "2(1 + cos 2x + cos 4x)\n");

  const auto d1 = run_cli({"kernel", "expand", "--s", "1"});
  CHECK(d1.out == "2(cos x)\n");

  const auto d4 = run_cli({"kernel", "expand", "--s", "4", "--format", "text"});
  CHECK(d4.out ==
        "2(4 + 7cos 2x + 7cos 4x + 5cos 6x + 5cos 8x + 3cos 10x + 2cos 12x + cos 14x + "
        "cos 16x)\n");
}

TEST_CASE("kernel expand csv rows are frequency,coefficient") {
  const auto result = run_cli({"kernel", "expand", "--s", "3", "--format", "csv"});
  CHECK(result.exit_code == 0);
  const auto lines = split_lines(result.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "frequency,coefficient");
  CHECK(lines[1] == "1,6");
  CHECK(lines[2] == "3,6");
  CHECK(lines[3] == "5,4");
  CHECK(lines[4] == "7,2");
  CHECK(lines[5] == "9,2");
}

TEST_CASE("kernel expand json embeds the manifest and round-trips") {
  const auto result = run_cli({"kernel", "expand", "--s", "4", "--format", "json"});
  CHECK(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("manifest").at("schema") == 1);
  CHECK(j.at("manifest").at("command").get<std::string>().find("kernel expand") !=
        std::string::npos);
  CHECK(j.at("s") == 4);
  const ph::TrigPoly series = ph::TrigPoly::from_json(j.at("series"));
  CHECK(series == ph::build_kernel(4).series);
}

TEST_CASE("quadrature json output") {
  const auto result = run_cli({"quadrature", "--s", "5", "--form", "reduced", "--json"});
  CHECK(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("rounded") == 7);
  CHECK(j.at("residual").get<double>() < 1e-6);
  CHECK(j.at("trusted") == true);
  CHECK(j.at("manifest").at("schema") == 1);

  const auto general =
      run_cli({"quadrature", "--s", "3", "--m", "2", "--form", "general", "--json"});
  CHECK(nlohmann::json::parse(general.out).at("rounded") == 3);
}

TEST_CASE("quadrature beyond the envelope is a usage error with guidance") {
  const auto result = run_cli({"quadrature", "--s", "20", "--form", "reduced"});
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("envelope") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"partitions", "table", "--bogus"}).exit_code == 2);
  CHECK(run_cli({"nonsense"}).exit_code == 2);
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"kernel"}).exit_code == 2);
  CHECK(run_cli({"verify", "notasuite"}).exit_code == 2);
}

TEST_CASE("verify oracles passes and exits 0") {
  const auto result = run_cli({"verify", "oracles"});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify section4 json reports all_passed") {
  const auto result = run_cli({"verify", "section4", "--max-s", "6", "--json"});
  CHECK(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("all_passed") == true);
  CHECK(!j.at("reports").empty());
  for (const auto& r : j.at("reports")) CHECK(r.at("passed") == true);
}

TEST_CASE("identical argv produces byte-identical machine output") {
  const std::vector<std::string> argv = {"verify", "section4", "--max-s", "5", "--json",
                                         "--threads", "2"};
  const auto first = run_cli(argv);
  const auto second = run_cli(argv);
  CHECK(first.out == second.out);
  CHECK(first.exit_code == second.exit_code);
}

TEST_CASE("reports are thread-count independent") {
  const auto one = run_cli({"verify", "quadrature", "--max-s", "6", "--json", "--threads", "1"});
  const auto four = run_cli({"verify", "quadrature", "--max-s", "6", "--json", "--threads", "4"});
  const auto j1 = nlohmann::json::parse(one.out);
  const auto j4 = nlohmann::json::parse(four.out);
  CHECK(j1.at("reports") == j4.at("reports"));
}

TEST_CASE("bench emits a CSV schema with both evaluator and rule columns") {
  const auto result = run_cli({"bench", "--max-s", "3"});
  CHECK(result.exit_code == 0);
  const auto lines = split_lines(result.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "s,build_kernel_ms,reduced_series_trapezoid_ms,reduced_direct_trapezoid_ms,"
        "reduced_series_gauss_ms,reduced_direct_gauss_ms");
}

TEST_CASE("bench marks quadrature columns skipped beyond the envelope") {
  const auto result = run_cli({"bench", "--max-s", "15"});
  CHECK(result.exit_code == 0);
  const auto lines = split_lines(result.out);
  REQUIRE(lines.size() == 16);
  CHECK(lines[15].find("skipped,skipped,skipped,skipped") != std::string::npos);
  CHECK(lines[10].find("skipped") == std::string::npos);
}

TEST_CASE("--out writes the machine output to a file") {
  const std::string path = "cli_out_test.csv";
  const auto result =
      run_cli({"partitions", "table", "--max", "3", "--format", "csv", "--out", path});
  CHECK(result.exit_code == 0);
  CHECK(result.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str().find("3,3") != std::string::npos);
  file.close();
  std::remove(path.c_str());
}

TEST_CASE("wall time goes to stderr, not stdout") {
  const auto result = run_cli({"partitions", "table", "--max", "2", "--format", "csv"});
  CHECK(result.out.find("wall_ms") == std::string::npos);
  CHECK(result.err.find("wall_ms") != std::string::npos);
}

TEST_CASE("verify all respects --max-s and exits 0") {
  const auto result = run_cli({"verify", "all", "--max-s", "12"});
  CHECK(result.exit_code == 0);
}

TEST_CASE("PH_THREADS overrides --threads without changing results") {
  const auto baseline = run_cli({"quadrature", "--s", "7", "--form", "reduced", "--json"});
  setenv("PH_THREADS", "3", 1);
  const auto threaded = run_cli({"quadrature", "--s", "7", "--form", "reduced", "--json",
                                 "--threads", "1"});
  unsetenv("PH_THREADS");
  const auto a = nlohmann::json::parse(baseline.out);
  const auto b = nlohmann::json::parse(threaded.out);
  CHECK(a.at("raw") == b.at("raw"));
  CHECK(a.at("rounded") == b.at("rounded"));
}

TEST_CASE("enumeration guard surfaces as a usage error") {
  const auto result = run_cli({"partitions", "table", "--max", "45", "--oracle", "enumerate"});
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("guard") != std::string::npos);
  // The recurrence has no such guard.
  CHECK(run_cli({"partitions", "table", "--max", "45", "--oracle", "euler"}).exit_code == 0);
}

TEST_CASE("--help exits 0") {
  const auto result = run_cli({"--help"});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("partition-harmonics") != std::string::npos);
}
