// Copyright 2026 The odorqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "odorqa");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = odo::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const char* dir = std::getenv("ODORQA_TEST_TMP");
  if (dir) return std::string(dir) + "/" + name;
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

using nlohmann::json;

TEST_CASE("integral example") {
  Result r = run({"integral", "--alpha", "1/3", "--ell", "inf", "--eps", "1-a^2", "--tol", "0.01"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["header"].get<std::string>().rfind("odorqa ", 0) == 0);
  const double v = std::stod(j["value"]["decimal"].get<std::string>());
  CHECK(std::abs(v - 0.5) <= 0.01);
  CHECK(j["value"]["rational"] == "129/256");
  CHECK(j["k_used"] == 9);
  CHECK(j["eps"]["rational"] == "8/9");
}

TEST_CASE("header round-trips to the same run") {
  Result r = run({"integral", "--alpha", "0.2", "--ell", "inf", "--eps", "1 - a + a^2", "--quantity", "det", "--tol", "0.01"});
  REQUIRE(r.code == 0);
  const std::string header = json::parse(r.out)["header"];
  std::istringstream is(header);
  std::string tok, name, version, cmd;
  is >> name >> version >> cmd;
  std::vector<std::string> args{cmd};
  while (is >> tok) {
    const auto eq = tok.find('=');
    REQUIRE(eq != std::string::npos);
    args.push_back("--" + tok.substr(0, eq));
    args.push_back(tok.substr(eq + 1));
  }
  CHECK(header.find("eps=1-a+a^2") != std::string::npos);
  Result again = run(args);
  REQUIRE(again.code == 0);
  CHECK(again.out == r.out);
}

TEST_CASE("integral: det and exact f_k") {
  Result r = run({"integral", "--alpha", "1/3", "--ell", "inf", "--eps", "1-a+a^2",
                  "--quantity", "det", "--tol", "0.01"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(std::abs(std::stod(j["value"]["decimal"].get<std::string>()) - 4.0 / 7.0) <= 0.01);
  r = run({"integral", "--alpha", "1/3", "--eps", "a", "--k", "8"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"]["rational"] == "1/2");
}

TEST_CASE("exit codes") {
  Result r = run({"integral", "--alpha", "3/5", "--eps", "a"});
  CHECK(r.code == 2);
  CHECK(r.err.find("alpha must lie in (0, 1/2)") != std::string::npos);
  CHECK(run({"integral", "--alpha", "1/3", "--eps", "a^"}).code == 2);
  CHECK(run({"integral", "--alpha", "1/3", "--eps", "a^20", "--quantity", "det", "--ell", "inf",
             "--tol", "1e-6"}).code == 3);
  CHECK(run({"matrix", "--k", "20", "--alpha", "1/3", "--eps", "a"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify example") {
  Result r = run({"verify", "--k", "8", "--alpha", "1/3", "--eps", "a"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_pass"] == true);
  for (const char* p : {"A0", "A1", "B0", "B1", "C0", "C1"}) CHECK(j["patterns"][p]["holds"] == true);
}

TEST_CASE("orbit CSV") {
  Result r = run({"orbit", "--alpha", "1/3", "--word", "000", "--map", "fk", "--k", "3",
                  "--n", "9", "--exact"});
  REQUIRE(r.code == 0);
  CHECK(first_line(r.out).rfind("# odorqa ", 0) == 0);
  CHECK(r.out.find("iter,x\n0,0\n1,2/3\n2,2/9\n") != std::string::npos);
  CHECK(r.out.find("\n8,0\n") != std::string::npos);
  r = run({"orbit", "--alpha", "0.25", "--x0", "1", "--n", "2"});
  CHECK(r.out.find("0,1\n1,0\n") != std::string::npos);
  CHECK(run({"orbit", "--alpha", "1/3", "--n", "2"}).code == 2);
}

TEST_CASE("matrix JSON and PBM") {
  const std::string pbm = tmp("cli_matrix.pbm");
  Result r = run({"matrix", "--k", "3", "--alpha", "1/3", "--ell", "2", "--eps", "a", "--pbm", pbm});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["k"] == 3);
  CHECK(j["ell"] == "2");
  CHECK(j["ones_count"] == 32);
  std::string img = slurp(pbm);
  CHECK(img.rfind("P1\n# odorqa ", 0) == 0);
}

TEST_CASE("profile files start with the header") {
  const std::string csv = tmp("cli_profile.csv"), svg = tmp("cli_profile.svg");
  Result r = run({"profile", "--alpha", "0.2", "--points", "16", "--tol", "0.02",
                  "--csv", csv, "--svg", svg});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  const std::string header = j["header"];
  CHECK(first_line(slurp(csv)) == "# " + header);
  CHECK(first_line(slurp(svg)) == "<!-- " + header + " -->");
  CHECK(j["max"]["value"]["rational"] == "1");
  CHECK(header.find(" csv=" + csv) != std::string::npos);
  // Byte reproducibility of the numeric payload; the header differs (no svg).
  auto payload = [](const std::string& s) { return s.substr(s.find('\n')); };
  std::string first = slurp(csv);
  REQUIRE(run({"profile", "--alpha", "1/5", "--points", "16", "--tol", "0.02", "--csv", csv}).code == 0);
  CHECK(payload(slurp(csv)) == payload(first));
}

TEST_CASE("extremes and scan-alpha") {
  Result r = run({"extremes", "--alpha", "1/5", "--tol", "0.01"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["otdet"]["value"]["rational"] == "1");
  CHECK(j["otdet"]["grid_estimate"] == false);
  r = run({"scan-alpha", "--target", "0.45", "--tol", "0.01"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(std::abs(std::stod(j["utdet"]["value"]["decimal"].get<std::string>()) - 0.45) <= 0.01);
  CHECK(run({"scan-alpha", "--target", "0.2"}).code == 2);
}

TEST_CASE("bench") {
  Result r = run({"bench", "--k-min", "3", "--k-max", "6", "--alpha", "1/3", "--eps", "a^2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("k,naive_ms,fast_ms,naive_count,fast_count,equal") != std::string::npos);
  CHECK(r.out.find(",no\n") == std::string::npos);
  r = run({"bench", "--k-min", "20", "--k-max", "20", "--ell", "inf"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("20,refused,") != std::string::npos);
}
