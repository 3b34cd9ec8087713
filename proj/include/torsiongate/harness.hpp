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


#ifndef TORSIONGATE_HARNESS_HPP
#define TORSIONGATE_HARNESS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "torsiongate/io.hpp"
#include "torsiongate/theorems.hpp"

namespace torsiongate {

inline constexpr const char* kReportSchemaVersion = "1";

/// One line of a report. status is pass | fail | not_applicable | cap_exceeded.
struct TaskResult {
  std::string key;
  std::string result_id;
  std::string status;
  nlohmann::json body = nlohmann::json::object();
};

struct Report {
  std::vector<TaskResult> tasks;

  std::map<std::string, long> summary() const;
  bool has_failures() const;
  nlohmann::json to_json(bool timings = true) const;
  std::string to_text() const;
};

/// Maps a check result onto a report line.
TaskResult task_from_check(const std::string& key, const CheckResult& c);

struct HarnessOptions {
  int jobs = 1;
  bool verify = true;
  TorsionOptions torsion;
};

/// Runs fn(i) for i in [0, n) on `jobs` threads; results keep index order.
std::vector<TaskResult> run_parallel(std::size_t n, int jobs, const std::function<TaskResult(std::size_t)>& fn);

/// Every (curve, extension, l) triple: the prime-degree verdict and, when applicable
/// and requested, its brute-force verification. Non-normal cubic extensions also get
/// a torsion-structure task checked against the allowed list.
Report run_corpus(const std::vector<CorpusEntry>& corpus, const HarnessOptions& opts = {});

/// Degree cap from TORSIONGATE_DEGREE_CAP, or `fallback`.
int degree_cap_from_env(int fallback = 64);

}  // namespace torsiongate

#endif  // TORSIONGATE_HARNESS_HPP
