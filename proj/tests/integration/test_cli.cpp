// Copyright 2026 The orthox Authors
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

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "orthox/cli.hpp"
#include "orthox/error.hpp"
#include "orthox/exact_arith.hpp"
#include "orthox/lattice.hpp"

using namespace orthox;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ORTHOX_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntVector vec(const json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.emplace_back(x.get<std::string>());
  return IntVector(std::move(c));
}

std::vector<IntVector> vecs(const json& j) {
  std::vector<IntVector> out;
  for (const auto& v : j) out.push_back(vec(v));
  return out;
}

void all_pass(const json& rec) {
  REQUIRE(rec.contains("verification"));
  for (const auto& [k, v] : rec["verification"].items()) CHECK_MESSAGE(v == "pass", k);
}

}  // namespace

TEST_CASE("parse_vector") {
  CHECK(cli::parse_vector("1,2,2") == IntVector{1, 2, 2});
  CHECK(cli::parse_vector("[1, -2, 2]") == IntVector{1, -2, 2});
  CHECK(cli::parse_vector(" (0,3,4) ") == IntVector{0, 3, 4});
  CHECK_THROWS(cli::parse_vector("1,,2"));
  CHECK_THROWS(cli::parse_vector("1,a"));
  CHECK_THROWS(cli::parse_vector(""));
}

TEST_CASE("enumerate --count 8 matches the golden listing") {
  const Run r = run({"enumerate", "--count", "8"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == slurp("enumerate_count8.txt"));
  const Run one = run({"enumerate", "--limit", "1"});
  CHECK(one.out == "(0,0,1)\n");
}

TEST_CASE("extend JSON is byte-stable") {
  const Run a = run({"--format", "json", "extend", "1,2,2"});
  const Run b = run({"--format", "json", "extend", "1,2,2"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out == slurp("extend_1_2_2.json"));
}

TEST_CASE("extend output re-verifies after parsing") {
  for (const char* v : {"1,2,2", "0,0,1", "2,3,6", "-4,4,7", "10,20,20"}) {
    const Run r = run({"--format", "json", "extend", v});
    REQUIRE(r.code == cli::kOk);
    const json rec = json::parse(r.out);
    CHECK(rec["command"] == "extend");
    CHECK(rec.contains("version"));
    all_pass(rec);
    const auto basis = vecs(rec["result"]["basis"]);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == cli::parse_vector(v));
    CHECK(is_orthoregular(basis));
    const BigInt l(rec["result"]["length"].get<std::string>());
    CHECK(determinant(IntMatrix::from_columns(basis)) == l * l * l);
  }
}

TEST_CASE("text output parses back too") {
  const Run r = run({"extend", "2,3,6"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::vector<IntVector> basis;
  while (std::getline(in, line))
    if (line.rfind("  (", 0) == 0) basis.push_back(cli::parse_vector(line));
  REQUIRE(basis.size() == 3);
  CHECK(is_orthoregular(basis));
  CHECK(r.err.find("fail") == std::string::npos);
}

TEST_CASE("enumerate --count 100 --extend round trip") {
  const Run r = run({"--format", "json", "enumerate", "--count", "100", "--extend"});
  REQUIRE(r.code == cli::kOk);
  const json rec = json::parse(r.out);
  all_pass(rec);
  REQUIRE(rec["result"]["bases"].size() == 100);
  for (const auto& b : rec["result"]["bases"]) {
    const auto basis = vecs(b);
    REQUIRE(basis.size() == 3);
    REQUIRE(is_orthoregular(basis));
    REQUIRE(isqrt_exact(basis[0].norm_sq()));
  }
}

TEST_CASE("solve-form, hurwitz and explore records") {
  const json s = json::parse(run({"--format", "json", "solve-form", "5", "4", "5", "3"}).out);
  all_pass(s);
  const BigInt x(s["result"]["construction"]["x"].get<std::string>());
  const BigInt y(s["result"]["construction"]["y"].get<std::string>());
  CHECK(5 * x * x + 8 * x * y + 5 * y * y == 9);

  const json h = json::parse(run({"--format", "json", "hurwitz", "4", "1,0,0,0"}).out);
  all_pass(h);
  const auto hb = vecs(h["result"]["basis"]);
  REQUIRE(hb.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<BigInt> e(4, BigInt(0));
    e[i] = 1;
    CHECK(hb[i] == IntVector(e));
  }

  const Run er = run({"--format", "json", "explore", "1,1,1,1,1,1", "--bound", "3"});
  CHECK(er.code == cli::kOk);
  const json e = json::parse(er.out);
  all_pass(e);
  CHECK(e["result"]["achieved"] == 3);
  CHECK(e["result"]["exhausted"] == true);
  auto w = vecs(e["result"]["witness"]);
  w.insert(w.begin(), IntVector{1, 1, 1, 1, 1, 1});
  CHECK(is_orthoregular(w));
}

TEST_CASE("other subcommands") {
  const Run lift = run({"lift", "3,4"});
  CHECK(lift.code == cli::kOk);
  CHECK(lift.out.find("(5,0,0)") != std::string::npos);
  CHECK(lift.out.find("(0,3,4)") != std::string::npos);

  const Run comp = run({"--format", "json", "compose", "1,2,2,2,1,2", "--split", "3,3"});
  CHECK(comp.code == cli::kOk);
  const json c = json::parse(comp.out);
  all_pass(c);

  const json o = json::parse(run({"--format", "json", "odd-square", "17"}).out);
  all_pass(o);
  CHECK(run({"odd-square", "3"}).code != cli::kOk);

  const Run pb = run({"pair-basis", "5"});
  CHECK(pb.code == cli::kOk);
  CHECK(run({"pair-basis", "4"}).code == cli::kUsage);

  const Run st = run({"selftest", "--seed", "3", "--count", "200"});
  CHECK(st.code == cli::kOk);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"extend", "1,2"}).code == cli::kUsage);
  CHECK(run({"extend", "1,x,2"}).code == cli::kUsage);
  CHECK(run({"--format", "yaml", "extend", "1,2,2"}).code == cli::kUsage);

  const Run inf = run({"extend", "1,1,1"});
  CHECK(inf.code == cli::kInfeasible);
  CHECK(inf.err.find("not a perfect square") != std::string::npos);
  CHECK(run({"solve-form", "3", "0", "3", "3"}).code == cli::kInfeasible);

  CHECK(run({"explore", "1,2,2", "--bound", "1"}).code == cli::kInconclusive);
  CHECK(run({"explore", "1,1,1,1,1,1,1,1,1,1", "--bound", "1"}).code == cli::kUsage);
}

TEST_CASE("parity certificate for all-odd vectors") {
  const Run r = run({"--format", "json", "explore", "1,1,1", "--bound", "2"});
  CHECK(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["result"]["achieved"] == 0);
  CHECK(j["result"].contains("parity_certificate"));
}
