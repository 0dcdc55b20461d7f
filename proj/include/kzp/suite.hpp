// Copyright 2026 The kzp Authors
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


#pragma once

// The reproducibility suite: one entry per acceptance criterion, with a
// deterministic JSON report (no timings, seeded sampling only).

#include <cstdint>
#include <string>
#include <vector>

#include "kzp/construct.hpp"
#include "kzp/json_io.hpp"

namespace kzp {

enum class SuiteLevel { kQuick, kFull };

SuiteLevel parse_suite_level(const std::string& text);
std::string to_string(SuiteLevel level);

struct SuiteConfig {
  SuiteLevel level = SuiteLevel::kQuick;
  std::uint64_t seed = 42;
};

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  json detail;  // counts, sampled inputs and documented exclusions
};

/// Runs one criterion (1 ... kCriterionCount). Failures are reported in the
/// result; only a bad id throws.
CriterionResult run_criterion(int id, const SuiteConfig& cfg);

/// {"suite", "version", "level", "seed", "passed", "criteria": [...]}.
json run_suite(const SuiteConfig& cfg);

/// All ordered tuples of distinct residues mod p of the given length, in
/// lexicographic order.
std::vector<std::vector<std::uint32_t>> distinct_tuples(std::uint32_t p, std::uint32_t len);

/// The parameter tuples of the Taylor-solution sweep at the given level.
/// Every tuple satisfies ProblemSpec::validate.
std::vector<ProblemSpec> sweep_specs(SuiteLevel level);

}  // namespace kzp
