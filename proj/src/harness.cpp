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


#include "torsiongate/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace torsiongate {

using nlohmann::json;

std::map<std::string, long> Report::summary() const {
  std::map<std::string, long> s{{"pass", 0}, {"fail", 0}, {"not_applicable", 0}, {"cap_exceeded", 0}};
  for (const auto& t : tasks) ++s[t.status];
  return s;
}

bool Report::has_failures() const { return summary().at("fail") > 0; }

namespace {

void strip_timings(json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) strip_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timings(v);
  }
}

}  // namespace

json Report::to_json(bool timings) const {
  json ts = json::array();
  for (const auto& t : tasks) {
    json b = t.body;
    if (!timings) strip_timings(b);
    ts.push_back({{"key", t.key}, {"result_id", t.result_id}, {"status", t.status}, {"body", b}});
  }
  return json{{"schema_version", kReportSchemaVersion}, {"tasks", ts}, {"summary", summary()}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& t : tasks) {
    os << t.status << "  " << t.result_id << "  " << t.key;
    if (t.body.contains("reason")) os << "  (" << t.body["reason"].get<std::string>() << ")";
    os << "\n";
  }
  auto s = summary();
  os << "summary: pass " << s["pass"] << ", fail " << s["fail"] << ", not applicable " << s["not_applicable"]
     << ", cap exceeded " << s["cap_exceeded"] << "\n";
  return os.str();
}

TaskResult task_from_check(const std::string& key, const CheckResult& c) {
  json body = c.to_json();
  return TaskResult{key, c.id, c.status, body};
}

std::vector<TaskResult> run_parallel(std::size_t n, int jobs, const std::function<TaskResult(std::size_t)>& fn) {
  std::vector<TaskResult> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
  };
  int k = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (k == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

namespace {

struct CorpusTask {
  std::size_t entry, ext;
  int ell;  // 0 for the torsion-structure task
};

std::string task_key(const CorpusEntry& e, std::size_t idx, const ExtensionSpec& x, int ell) {
  std::string name = e.name.empty() ? "curve" + std::to_string(idx) : e.name;
  std::string ext = x.label.empty() ? x.poly.to_string() : x.label;
  return name + " | " + ext + " | " + (ell ? "l=" + std::to_string(ell) : "torsion");
}

TaskResult run_verdict_task(const CorpusEntry& e, const ExtensionSpec& x, int ell, const std::string& key,
                            const HarnessOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  TaskResult r{key, "thm_nonGal_p", "not_applicable", json::object()};
  try {
    Verdict v = thm_nongal_p(e.curve, x.poly, ell, opts.torsion);
    r.result_id = v.result_id;
    r.body["verdict"] = v.to_json();
    if (!v.applicable) {
      r.body["reason"] = v.reason;
    } else if (!opts.verify) {
      r.status = "pass";
      r.body["verified"] = false;
    } else {
      VerificationReport rep = verify_verdict(v, opts.torsion);
      r.body["verification"] = rep.to_json();
      r.body["verification"].erase("verdict");
      r.status = rep.partial ? "cap_exceeded" : rep.agrees ? "pass" : "fail";
    }
  } catch (const DegreeCapExceeded& ex) {
    r.status = "cap_exceeded";
    r.body["reason"] = ex.what();
  } catch (const DomainError& ex) {
    r.body["reason"] = ex.what();
  }
  r.body["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

TaskResult run_torsion_task(const CorpusEntry& e, const ExtensionSpec& x, const std::string& key,
                            const HarnessOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  TaskResult r{key, "cor_najman", "not_applicable", json::object()};
  try {
    Compositum L = compositum(PolyNF::from_q(e.curve.field(), x.poly), opts.torsion.field);
    TorsionData t = torsion_subgroup(e.curve, L.embedding, opts.torsion);
    r.body["torsion"] = {{"structure", t.structure()}, {"invariants", {t.m, t.n}}};
    bool ok = najman_check(t, x.poly);
    r.status = ok ? "pass" : "fail";
  } catch (const DegreeCapExceeded& ex) {
    r.status = "cap_exceeded";
    r.body["reason"] = ex.what();
  } catch (const DomainError& ex) {
    r.body["reason"] = ex.what();
  }
  r.body["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool is_nonnormal_cubic_over_Q(const CorpusEntry& e, const ExtensionSpec& x) {
  if (!e.curve.field().is_rational() || x.poly.degree() != 3) return false;
  try {
    return cubic_galois_group(x.poly.monic()).kind == "S3";
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

Report run_corpus(const std::vector<CorpusEntry>& corpus, const HarnessOptions& opts) {
  std::vector<CorpusTask> tasks;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t k = 0; k < corpus[i].extensions.size(); ++k) {
      for (int ell : corpus[i].primes) tasks.push_back({i, k, ell});
      if (is_nonnormal_cubic_over_Q(corpus[i], corpus[i].extensions[k])) tasks.push_back({i, k, 0});
    }
  Report rep;
  rep.tasks = run_parallel(tasks.size(), opts.jobs, [&](std::size_t n) {
    const auto& t = tasks[n];
    const CorpusEntry& e = corpus[t.entry];
    const ExtensionSpec& x = e.extensions[t.ext];
    std::string key = task_key(e, t.entry, x, t.ell);
    return t.ell ? run_verdict_task(e, x, t.ell, key, opts) : run_torsion_task(e, x, key, opts);
  });
  return rep;
}

int degree_cap_from_env(int fallback) {
  const char* v = std::getenv("TORSIONGATE_DEGREE_CAP");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw DomainError(std::string("TORSIONGATE_DEGREE_CAP is not a positive integer: ") + v);
  return static_cast<int>(n);
}

}  // namespace torsiongate
