/*
   Copyright 2026 The torsiongate Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + TG_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tg_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("e11a1.json", R"({"field": "Q", "a_invariants": [0, -1, 1, -10, -20]})");
    write("ex3p1.json", R"({"a_invariants": [0, 0, 0, 0, 1]})");
    write("cbrt2.json", R"({"defining_poly": ["-2/1", "0/1", "0/1", "1/1"], "label": "cbrt2"})");
    write("singular.json", R"({"a_invariants": [0, 0, 0, 0, 0]})");
    write("reducible.json", R"({"defining_poly": ["-1/1", "0/1", "1/1"]})");
    write("small_corpus.json", R"([
      {"name": "11a1", "curve": {"a_invariants": [0, -1, 1, -10, -20]},
       "extensions": [{"defining_poly": ["-2/1", "0/1", "0/1", "1/1"], "label": "x^3-2"},
                      {"defining_poly": ["1/1", "0/1", "1/1"], "label": "x^2+1"}],
       "primes": [2, 5, 13]},
      {"name": "y2=x3+1", "curve": {"a_invariants": [0, 0, 0, 0, 1]},
       "extensions": [{"defining_poly": ["1/1", "1/1", "0/1", "1/1"], "label": "x^3+x+1"}],
       "primes": [3, 7]}])");
  }
  void TearDown() override { fs::remove_all(dir_); }
  void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CheckVerifiesClauseB) {
  Outcome r = run("check --curve " + path("ex3p1.json") + " --base Q --ext " + path("cbrt2.json") + " --ell 13 --verify");
  ASSERT_EQ(r.code, 0) << r.out;
  json j = json::parse(r.out);
  EXPECT_EQ(j["tasks"][0]["result_id"], "thm_nonGal_p_b");
  EXPECT_TRUE(j["tasks"][0]["body"]["verification"]["agrees"].get<bool>());
  EXPECT_EQ(j["summary"]["pass"], 1);
}

TEST_F(Cli, CheckNotApplicableIsNotAFailure) {
  // E(Q)[2] = O for 11a1 and p = 3, so no clause applies at l = 2.
  Outcome r = run("check --curve " + path("e11a1.json") + " --ext " + path("cbrt2.json") + " --ell 2 --verify");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["summary"]["not_applicable"], 1);
}

TEST_F(Cli, TorsionOverCubicField) {
  Outcome r = run("torsion --curve " + path("e11a1.json") + " --field " + path("cbrt2.json"));
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["structure"], "Z/5");
  EXPECT_EQ(j["field"]["defining_poly"].size(), 4u);
}

TEST_F(Cli, LemmaSweepAndCyclotomicImage) {
  Outcome r = run("lemmas --name borel --ell 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["tasks"][0]["body"]["detail"]["mismatches"], 0);
  Outcome c = run("cyc-image --ell 13");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["order"], 12);
  Outcome g = run("galois --ext " + path("cbrt2.json"));
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(json::parse(g.out)["cubic"]["kind"], "S3");
}

TEST_F(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("check --curve " + path("ex3p1.json") + " --ext " + path("cbrt2.json") + " --ell 13 --bogus").code, 2);
  EXPECT_EQ(run("lemmas --name nothing --ell 3").code, 2);
  EXPECT_EQ(run("torsion --curve " + path("singular.json")).code, 2);
  EXPECT_EQ(run("cyc-image --base " + path("reducible.json") + " --ell 3").code, 2);
  EXPECT_EQ(run("torsion --curve " + path("missing.json")).code, 2);
  EXPECT_EQ(run("check --curve " + path("ex3p1.json") + " --base " + path("cbrt2.json") + " --ext " +
                path("cbrt2.json") + " --ell 13")
                .code,
            2);
}

TEST_F(Cli, DegreeCapFromEnvironmentAndFlag) {
  std::string args = "torsion --curve " + path("e11a1.json") + " --field " + path("cbrt2.json");
  EXPECT_EQ(run(args, "TORSIONGATE_DEGREE_CAP=2").code, 1);
  EXPECT_EQ(run(args + " --degree-cap 2").code, 1);
  EXPECT_EQ(run(args, "TORSIONGATE_DEGREE_CAP=64").code, 0);
}

TEST_F(Cli, BatchIsDeterministic) {
  std::string args = "batch --input " + path("small_corpus.json") + " --verify --no-timings";
  Outcome a = run(args), b = run(args + " --jobs 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  json j = json::parse(a.out);
  long total = 0;
  for (const auto& [k, v] : j["summary"].items()) total += v.get<long>();
  EXPECT_EQ(total, static_cast<long>(j["tasks"].size()));
  EXPECT_EQ(j["tasks"].size(), 3u + 3u + 1u + 2u + 1u);
  EXPECT_EQ(a.out.find("seconds"), std::string::npos);
  Outcome t = run("batch --input " + path("small_corpus.json") + " --format text --output " + path("out.txt"));
  EXPECT_EQ(t.code, 0);
  std::ifstream in(path("out.txt"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("thm_nonGal_p_a"), std::string::npos);
  EXPECT_NE(text.find("summary:"), std::string::npos);
}
