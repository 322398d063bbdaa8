// Copyright 2026-present the convchain project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "convchain/chains.hpp"
#include "convchain/io.hpp"

using namespace convchain;

namespace {

Rational Q(long n, long d = 1) { return rational(n, d); }

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(CONVCHAIN_CLI) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

int run_cli_status(const std::string& args) {
  const std::string cmd = std::string(CONVCHAIN_CLI) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("scalar formatting") {
  CHECK(format_scalar(Q(3, 4)) == "3/4");
  CHECK(format_scalar(Q(-7)) == "-7");
  CHECK(format_scalar(0.1) == "0.1");
  CHECK(parse_scalar<double>(format_scalar(0.1)) == 0.1);
  CHECK(parse_rational("0.25") == Q(1, 4));
  CHECK(parse_rational("-0.25") == Q(-1, 4));
  CHECK(parse_rational("-3/9") == Q(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("matrix CSV round trip, exact") {
  auto tm = build_finite<Rational>(CaseId::HI, {{"a", Q(1)}, {"b", Q(1)}, {"c", Q(1)}}, 4);
  auto back = matrix_from_csv<Rational>(matrix_to_csv(tm.K));
  CHECK(back == tm.K);
}

TEST_CASE("matrix CSV round trip, float") {
  auto tm = build_finite<double>(CaseId::KI, {{"a", 0.5}, {"b", 0.3}}, 5);
  auto back = matrix_from_csv<double>(matrix_to_csv(tm.K));
  CHECK(back == tm.K);  // shortest round-trip decimals reparse bit-exactly
}

TEST_CASE("chain config documents") {
  const std::string text = R"({
    "case": "K-i",
    "params": {"a": "1/2", "b": "1/2"},
    "N": 4,
    "backend": "exact"
  })";
  auto config = parse_chain_config(text);
  CHECK(config.case_token == "K-i");
  CHECK(config.params.at("a") == "1/2");
  CHECK(config.lattice_n == 4);
  auto round = parse_chain_config(chain_config_to_json(config));
  CHECK(round.case_token == config.case_token);
  CHECK(round.params == config.params);

  CHECK_THROWS_AS(parse_chain_config(R"({"case": "K-i", "bogus": 1})"), DomainError);
  CHECK_THROWS_AS(parse_chain_config(R"({"backend": "quantum"})"), DomainError);
  CHECK_THROWS_AS(parse_chain_config("not json"), DomainError);
}

TEST_CASE("cli build output is byte-stable and reparses") {
  const std::string args = "build --case K-i --params a=1/2,b=1/2 --N 3 --backend exact";
  auto first = run_cli(args);
  auto second = run_cli(args);
  CHECK(first == second);
  auto matrix = matrix_from_csv<Rational>(first);
  auto direct = build_finite<Rational>(CaseId::KI, {{"a", Q(1, 2)}, {"b", Q(1, 2)}}, 3);
  CHECK(matrix == direct.K);
}

TEST_CASE("cli config file with flag overrides") {
  const std::string path = "/tmp/convchain_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"case": "K-i", "params": {"a": "1/2", "b": "1/2"}, "N": 2, "backend": "exact"})";
  }
  auto from_config = run_cli("build --config " + path);
  CHECK(matrix_from_csv<Rational>(from_config).size() == 3);
  // A flag overrides the document's N.
  auto overridden = run_cli("build --config " + path + " --N 4");
  CHECK(matrix_from_csv<Rational>(overridden).size() == 5);
  std::remove(path.c_str());
}

TEST_CASE("cli spectrum of the frozen example") {
  auto out = run_cli("spectrum --case K-i --params a=1/2,b=1/2 --N 1 --backend exact");
  CHECK(out.find("\"1/4\"") != std::string::npos);
  CHECK(out.find("\"2/3\"") != std::string::npos);  // resolved stationary p
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli_status("verify --suite identities --grid 4") == 0);
  CHECK(run_cli_status("build --case nonsense --N 2") != 0);
  CHECK(run_cli_status("build --case K-i --params a=1/2,b=1/2") != 0);       // missing N
  CHECK(run_cli_status("build --case qM-i --params a=1/2,b=1/2,c=1/2,q=1/2 "
                       "--backend exact") != 0);  // exact backend unavailable
  CHECK(run_cli_status("build --case K-i --params a=3/2,b=1/2 --N 2") != 0); // domain error
}

TEST_CASE("cli sample determinism") {
  const std::string args =
      "sample --case K-i --params a=1/2,b=1/2 --N 4 --p0 delta:0 --l 5 --count 500 --seed 7";
  CHECK(run_cli(args) == run_cli(args));
}
