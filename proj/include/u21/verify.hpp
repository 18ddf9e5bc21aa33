// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
// language governing permissions and limitations under the License.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "u21/report.hpp"

// The desk-scale acceptance suite: criteria A1..A11, each an exact check
// with a wall-clock budget.
namespace u21::verify {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;         // exact outcome
  double limit_seconds = 0;  // 0: no budget
  double seconds = 0;        // measured, never serialised
  report::Json detail;
  std::vector<std::string> diffs;

  bool within_limit() const { return limit_seconds <= 0 || seconds < limit_seconds; }
  bool ok() const { return pass && within_limit(); }
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
  // Canonical JSON: no timings, grid cases keyed and sorted.
  report::Json to_json() const;
  // One line per criterion, with timings.
  std::string text() const;
};

struct Options {
  std::uint64_t seed = 42;
  unsigned jobs = 1;                // worker threads for the bridge grid
  std::vector<std::string> only;    // criterion ids; empty runs all
};

// Suite names accepted by run(); only "desk" exists.
bool known_suite(const std::string& name);
SuiteResult run(const std::string& suite, const Options& opt);
CriterionResult run_criterion(const std::string& id, const Options& opt);
const std::vector<std::string>& criterion_ids();

}  // namespace u21::verify
