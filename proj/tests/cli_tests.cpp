#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(TOGGLELAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

} // namespace

TEST_CASE("dims for a family instance") {
  const RunResult r = run_cli("dims --family rect --m 3 --n 4 --format json");
  CHECK(r.exit_code == 0);
  const json row = json::parse(r.output);
  CHECK(row["dim_IT"] == 6);
  CHECK(row["dim_AT"] == 6);
  CHECK(row["pass"] == true);
}

TEST_CASE("dims for a partition") {
  const RunResult r = run_cli("dims --partition 5,2,1,1 --format json");
  CHECK(r.exit_code == 0);
  const json row = json::parse(r.output);
  CHECK(row["border_cells"] == 8);
  CHECK(row["corner_cells"] == 2);
  CHECK(row["dim_IT"] == 6);
  CHECK(row["pass"] == true);
}

TEST_CASE("dims for a single-cell diagram file") {
  const std::string path = "single_cell.txt";
  std::ofstream(path) << "#\n";
  const RunResult r = run_cli("dims --diagram " + path + " --format json");
  CHECK(r.exit_code == 0);
  const json row = json::parse(r.output);
  CHECK(row["rank"] == 0);
  CHECK(row["dim_IT"] == 1);
  CHECK(row["dim_AT"] == 1);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli("dims --format json").exit_code == 1);
  CHECK(run_cli("dims --family rect --m 3 --n 4 --partition 2,1").exit_code ==
        1);
  CHECK(run_cli("dims --family hexagon --n 3").exit_code == 1);
  CHECK(run_cli("rook --family rect --m 2 --n 2 --cell bogus").exit_code == 1);
}

TEST_CASE("cap violations exit with 2") {
  CHECK(run_cli("dims --family rect --m 3 --n 4 --cap 10").exit_code == 2);
  CHECK(run_cli("verify --suite main --max 4 --cap 10").exit_code == 2);
}

TEST_CASE("environment variable sets the default cap") {
  const std::string command = std::string("TOGGLELAB_CAP=10 ") +
                              TOGGLELAB_CLI_PATH +
                              " dims --family rect --m 3 --n 4 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (fread(buffer.data(), 1, buffer.size(), pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("verify main at a small bound") {
  const RunResult r = run_cli("verify --suite main --max 3 --format json");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["pass"] == true);
  // rectangles over ordered pairs plus three one-parameter families
  CHECK(report["num_rows"] == 4 + 2 + 2 + 2);
  for (const auto& row : report["rows"])
    CHECK(row["pass"] == true);
}

TEST_CASE("verify rooks is reproducible for a fixed seed") {
  const std::string args =
      "verify --suite rooks --trials 5 --seed 7 --format json";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  const json report = json::parse(first.output);
  CHECK(report["num_rows"] == 5);
  CHECK(report["pass"] == true);

  const RunResult other = run_cli(
      "verify --suite rooks --trials 5 --seed 8 --format json");
  CHECK(other.output != first.output);
}

TEST_CASE("orbit listing") {
  const RunResult r =
      run_cli("orbits --family rect --m 2 --n 2 --format json");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["orbit_sizes"] == json::array({4, 2}));
  CHECK(report["num_ideals"] == 6);
}

TEST_CASE("basis export") {
  const RunResult r =
      run_cli("basis --family typeB --n 3 --which B1 --format json");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["B1"].size() == 5);
  // one of the five carries the toggle at the top cell (3,3) with constant -1
  bool top_cell_with_constant = false;
  for (const auto& entry : report["B1"]) {
    if (entry["tog"].size() == 1 && entry["tog"].contains("0") &&
        entry["const"] == "-1")
      top_cell_with_constant = true;
  }
  CHECK(top_cell_with_constant);
}

TEST_CASE("rook report with support map") {
  std::ofstream("rook_input.txt") << "####\n####\n####\n";
  const RunResult r = run_cli(
      "rook --diagram rook_input.txt --cell 2,2 --format json");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["reduced_support"]["2,2"] == "2");
  CHECK(report["evaluates_to_one"] == true);
  std::remove("rook_input.txt");
}

TEST_CASE("rook support on a diagram too large to enumerate") {
  // the 97-cell staircase shape: supports are exact, evaluation checks are
  // reported as null because the ideal lattice is far beyond the cap
  std::ofstream out("big_shape.txt");
  for (int r = 1; r <= 2; ++r)
    out << "#####\n";
  for (int r = 3; r <= 4; ++r)
    out << "############\n";
  for (int r = 5; r <= 6; ++r)
    out << "......######\n";
  for (int r = 7; r <= 8; ++r)
    out << "........####\n";
  for (int r = 9; r <= 13; ++r)
    out << "........#######\n";
  for (int r = 14; r <= 15; ++r)
    out << "...........####\n";
  out.close();

  const RunResult r = run_cli(
      "rook --diagram big_shape.txt --cell 9,12 --format json");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report["reduced_support"]["9,12"] == "2");
  CHECK(report["reduced_support"]["4,6"] == "1");
  CHECK(report["reduced_support"].size() == 29); // one 2, twenty-eight 1s
  CHECK(report["evaluates_to_one"].is_null());
  std::remove("big_shape.txt");
}

TEST_CASE("csv and table formats") {
  const RunResult csv =
      run_cli("dims --family rect --m 2 --n 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("family,params,num_elements") == 0);
  CHECK(csv.output.find("rect") != std::string::npos);

  const RunResult table =
      run_cli("dims --family rect --m 2 --n 2 --format table");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("dim_IT") != std::string::npos);
}

TEST_CASE("identical configuration gives identical bytes") {
  const std::string args = "verify --suite determinant --format json";
  CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("output redirection") {
  const RunResult r = run_cli(
      "dims --family typeA --n 3 --format json --out dims_out.json");
  CHECK(r.exit_code == 0);
  std::ifstream in("dims_out.json");
  REQUIRE(in.good());
  const json row = json::parse(in);
  CHECK(row["dim_IT"] == 3);
  std::remove("dims_out.json");
}
