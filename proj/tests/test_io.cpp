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

#include "torsiongate/harness.hpp"
#include "torsiongate/io.hpp"

using namespace torsiongate;
using nlohmann::json;

TEST(PolyJson, CoefficientStrings) {
  PolyQ f{-2, 0, 0, 1};
  EXPECT_EQ(poly_to_json(f), json::parse(R"(["-2/1","0/1","0/1","1/1"])"));
  EXPECT_EQ(poly_from_json(poly_to_json(f)), f);
  EXPECT_EQ(poly_from_json(json::parse(R"(["1/2", 3])")), PolyQ(std::vector<Rational>{Rational(1, 2), Rational(3)}));
  EXPECT_THROW(poly_from_json(json::parse(R"(["x"])")), SpecError);
  EXPECT_THROW(poly_from_json(json::parse(R"({"a": 1})")), SpecError);
}

TEST(FieldJson, RoundTripAndValidation) {
  NumberField K = nf_create(PolyQ{-2, 0, 0, 1}, "cbrt2");
  NumberField back = field_from_json(field_to_json(K));
  EXPECT_EQ(back.defining_poly(), K.defining_poly());
  EXPECT_EQ(back.label(), "cbrt2");
  EXPECT_TRUE(field_from_json("Q").is_rational());
  EXPECT_TRUE(field_from_json(field_to_json(NumberField())).is_rational());
  try {
    field_from_json(json::parse(R"({"defining_poly": ["-1/1","0/1","1/1"]})"));
    FAIL() << "reducible polynomial accepted";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("factor x - 1"), std::string::npos) << e.what();
  }
  FieldElement a = K.generator() * K.generator() + K.from_rational(Rational(1, 3));
  EXPECT_EQ(element_from_json(K, element_to_json(a)), a);
  EXPECT_THROW(element_from_json(K, json::parse(R"(["1/1"])")), SpecError);
}

TEST(CurveJson, RoundTripAndErrors) {
  Curve E = Curve::over_Q({0, -1, 1, -10, -20});
  Curve back = curve_from_json(curve_to_json(E));
  EXPECT_EQ(curve_to_json(back), curve_to_json(E));
  NumberField K = nf_create(PolyQ{1, 0, 1}, "i");
  Curve F = Curve::short_model(K, K.generator(), K.one());
  EXPECT_EQ(curve_to_json(curve_from_json(curve_to_json(F))), curve_to_json(F));
  // Plain integers are accepted for curves over Q.
  EXPECT_EQ(curve_to_json(curve_from_json(json::parse(R"({"a_invariants": [0, -1, 1, -10, -20]})"))),
            curve_to_json(E));
  try {
    curve_from_json(json::parse(R"({"a_invariants": [0, 0, 0, 0, 0]})"));
    FAIL() << "singular curve accepted";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("Delta = 0"), std::string::npos);
  }
  try {
    curve_from_json(json::parse(R"({"a_invariants": [0, 0, 0, "q", 1]})"));
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("curve.a_invariants[3]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(curve_from_json(json::parse(R"({"a_invariants": [0, 0, 0, 1]})")), SpecError);
}

TEST(CorpusJson, CheckedInCorpusRoundTrips) {
  json j = read_json_file(TG_CORPUS);
  auto corpus = corpus_from_json(j);
  EXPECT_EQ(corpus.size(), 30u);
  EXPECT_EQ(corpus_to_json(corpus), j);
  for (const auto& e : corpus) {
    EXPECT_EQ(e.extensions.size(), 6u);
    EXPECT_EQ(e.primes, (std::vector<int>{2, 3, 5, 7, 13}));
  }
}

TEST(JsonText, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_json_text("{\n  \"a\": [1,\n 2,]\n}", "f.json");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("f.json:3:", 0), 0u) << e.what();
  }
  EXPECT_THROW(read_json_file("/nonexistent/x.json"), SpecError);
}

TEST(ReportJson, SummaryCounts) {
  Report empty;
  json j = empty.to_json();
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_TRUE(j["tasks"].empty());
  for (const char* k : {"pass", "fail", "not_applicable", "cap_exceeded"}) EXPECT_EQ(j["summary"][k], 0);
  EXPECT_FALSE(empty.has_failures());

  Report one;
  one.tasks.push_back({"a", "x", "pass", {{"seconds", 1.5}}});
  EXPECT_EQ(one.to_json()["summary"]["pass"], 1);
  EXPECT_FALSE(one.to_json(false)["tasks"][0]["body"].contains("seconds"));
  EXPECT_TRUE(one.to_json(true)["tasks"][0]["body"].contains("seconds"));

  Report mixed;
  for (const char* s : {"pass", "fail", "pass", "not_applicable", "cap_exceeded", "not_applicable"})
    mixed.tasks.push_back({"k", "x", s, json::object()});
  auto s = mixed.summary();
  long total = 0;
  for (const auto& [k, v] : s) total += v;
  EXPECT_EQ(total, static_cast<long>(mixed.tasks.size()));
  EXPECT_EQ(s["not_applicable"], 2);
  EXPECT_TRUE(mixed.has_failures());
  EXPECT_NE(mixed.to_text().find("summary: pass 2, fail 1"), std::string::npos);
}

TEST(Parallel, OrderIndependentOfWorkers) {
  auto fn = [](std::size_t i) { return TaskResult{std::to_string(i), "x", i % 3 ? "pass" : "not_applicable", {}}; };
  auto a = run_parallel(50, 1, fn), b = run_parallel(50, 4, fn);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].key, b[i].key);
}

TEST(Harness, SmallCorpusAgrees) {
  auto corpus = corpus_from_json(read_json_file(TG_CORPUS));
  corpus.erase(corpus.begin() + 2, corpus.end());
  HarnessOptions o;
  Report r = run_corpus(corpus, o);
  EXPECT_FALSE(r.has_failures());
  EXPECT_GT(r.summary()["pass"], 10);
  o.jobs = 3;
  EXPECT_EQ(run_corpus(corpus, o).to_json(false), r.to_json(false));
}

TEST(Harness, DegreeCapFromEnvironment) {
  ::setenv("TORSIONGATE_DEGREE_CAP", "12", 1);
  EXPECT_EQ(degree_cap_from_env(), 12);
  ::setenv("TORSIONGATE_DEGREE_CAP", "abc", 1);
  EXPECT_THROW(degree_cap_from_env(), DomainError);
  ::unsetenv("TORSIONGATE_DEGREE_CAP");
  EXPECT_EQ(degree_cap_from_env(), 64);
}
