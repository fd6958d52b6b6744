// Copyright 2026 The nogosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nogo {

/// One named check inside a report. For frequency tests `value` is the
/// empirical frequency, `expected` the analytic probability and `statistic`
/// their absolute difference; for exact checks `statistic` is the error.
struct TestResult {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Everything one experiment run produced. Entries keep insertion order so
/// serialized reports are stable.
struct ExperimentReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, double>> analytic;   // label -> probability
  std::vector<std::pair<std::string, double>> empirical;  // label -> frequency
  std::vector<TestResult> tests;

  bool all_pass() const {
    for (const TestResult& t : tests) {
      if (!t.pass) return false;
    }
    return true;
  }
};

}  // namespace nogo
