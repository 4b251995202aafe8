// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the installed CLI binary end to end through popen.

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "unruh_qsl/analysis.hpp"
#include "unruh_qsl/csv.hpp"

using namespace unruh_qsl;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(UNRUH_QSL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
    result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("eval prints labelled fields plus a CSV row", "[cli]") {
  const CliResult res = run_cli("eval --p 0.25 --r 1");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output.find("channel    amplitude") != std::string::npos);
  REQUIRE(res.output.find(kSweepCsvHeader) != std::string::npos);

  // The trailing CSV row must re-validate against a direct library call.
  const auto header_pos = res.output.find(kSweepCsvHeader);
  std::istringstream csv(res.output.substr(header_pos));
  const auto rows = parse_sweep_csv(csv);
  REQUIRE(rows.size() == 1);
  const SweepRecord expect =
      make_sweep_record(DampingParameter(0.25), Rapidity(1.0));
  REQUIRE(std::abs(rows[0].a_r - expect.a_r) <= 1e-10);
  REQUIRE(std::abs(rows[0].distance - expect.distance) <= 1e-10);
  REQUIRE(std::abs(rows[0].avg_speed - expect.avg_speed) <= 1e-10);
  REQUIRE(std::abs(rows[0].tau_qsl - expect.tau_qsl) <= 1e-10);
  REQUIRE(std::abs(rows[0].delta_tau - expect.delta_tau) <= 1e-10);
}

TEST_CASE("eval handles the still point and the phase channel", "[cli]") {
  const CliResult still = run_cli("eval --p 1 --r 2");
  REQUIRE(still.exit_code == 0);
  REQUIRE(still.output.find("distance   0\n") != std::string::npos);
  REQUIRE(still.output.find("tau_qsl    1\n") != std::string::npos);
  REQUIRE(still.output.find("analytic") != std::string::npos);

  const CliResult phase = run_cli("eval --q 0.5 --channel phase");
  REQUIRE(phase.exit_code == 0);
  REQUIRE(phase.output.find("tau_qsl    1\n") != std::string::npos);
  REQUIRE(phase.output.find("valid      yes") != std::string::npos);

  const CliResult beyond = run_cli("eval --q 0.75 --channel phase");
  REQUIRE(beyond.exit_code == 0);
  REQUIRE(beyond.output.find("valid      no") != std::string::npos);
  REQUIRE(beyond.output.find("3.73205080757") != std::string::npos);
}

TEST_CASE("eval reports usage errors with exit code 1", "[cli]") {
  REQUIRE(run_cli("eval").exit_code == 1);
  REQUIRE(run_cli("eval --p 1.5 --r 0").exit_code == 1);
  REQUIRE(run_cli("eval --p 0.5 --r -2").exit_code == 1);
  REQUIRE(run_cli("nonsense").exit_code == 1);
  REQUIRE(run_cli("sweep --p 0.1 --r 5:0:10").exit_code == 1);
}

TEST_CASE("sweep output is deterministic and re-validates", "[cli]") {
  const auto path_a = temp_path("unruh_qsl_sweep_a.csv");
  const auto path_b = temp_path("unruh_qsl_sweep_b.csv");
  REQUIRE(run_cli("sweep --p 0.1 --r 0:5:200 -o " + path_a.string()).exit_code == 0);
  REQUIRE(run_cli("sweep --p 0.1 --r 0:5:200 -o " + path_b.string()).exit_code == 0);

  const std::string text_a = read_file(path_a);
  REQUIRE(text_a == read_file(path_b));

  std::istringstream in(text_a);
  const auto rows = parse_sweep_csv(in);
  REQUIRE(rows.size() == 200);
  REQUIRE(rows.front().r == 0.0);
  REQUIRE(rows.back().r == 5.0);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    REQUIRE(rows[i + 1].delta_tau - rows[i].delta_tau >= -1e-11);
  }
  for (std::size_t i = 0; i < rows.size(); i += 37) {
    const SweepRecord expect =
        make_sweep_record(DampingParameter(0.1), Rapidity(rows[i].r));
    REQUIRE(std::abs(rows[i].tau_qsl - expect.tau_qsl) <= 1e-10);
    REQUIRE(std::abs(rows[i].delta_tau - expect.delta_tau) <= 1e-10);
  }
  std::filesystem::remove(path_a);
  std::filesystem::remove(path_b);
}

TEST_CASE("sweep exposes the dip regime and single-point grids", "[cli]") {
  const auto path = temp_path("unruh_qsl_sweep_dip.csv");
  REQUIRE(run_cli("sweep --p 0.005 --r 0:5:200 -o " + path.string()).exit_code == 0);
  std::istringstream in(read_file(path));
  const auto rows = parse_sweep_csv(in);
  REQUIRE(rows.size() == 200);
  std::size_t min_idx = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].delta_tau < rows[min_idx].delta_tau) min_idx = i;
  }
  REQUIRE(min_idx > 0);
  REQUIRE(min_idx + 1 < rows.size());
  std::filesystem::remove(path);

  const CliResult single = run_cli("sweep --p 0.3 --r 0.5:0.5:1");
  REQUIRE(single.exit_code == 0);
  std::istringstream sin(single.output);
  const auto srow = parse_sweep_csv(sin);
  REQUIRE(srow.size() == 1);
  REQUIRE(srow[0].r == 0.5);
}

TEST_CASE("critical locates the regime boundaries", "[cli]") {
  const CliResult res = run_cli("critical");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.output.find("PASS p_c0") != std::string::npos);
  REQUIRE(res.output.find("PASS p_c1") != std::string::npos);
}

TEST_CASE("verify passes at a reduced rapidity cap", "[cli]") {
  const CliResult trivial = run_cli("verify --r-cap 0");
  REQUIRE(trivial.exit_code == 0);

  const CliResult low = run_cli("verify --r-cap 1");
  REQUIRE(low.exit_code == 0);
  REQUIRE(low.output.find("PASS distance deviation") != std::string::npos);
  REQUIRE(low.output.find("FAIL") == std::string::npos);
}

TEST_CASE("dump-state emits the Bell-state triplets", "[cli]") {
  const CliResult res = run_cli("dump-state --r 0");
  REQUIRE(res.exit_code == 0);
  std::istringstream in(res.output);
  std::string line;
  REQUIRE(std::getline(in, line));
  REQUIRE(line == "row,col,re,im");
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  REQUIRE(rows == 4);
}
