// Copyright 2026 The partialmat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARTIALMAT_SUITE_HPP
#define PARTIALMAT_SUITE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partialmat/catalog.hpp"
#include "partialmat/psd.hpp"

namespace partialmat {

struct SuiteEntry {
  Ensemble ensemble;
  std::size_t n;
  std::size_t k;
  std::size_t trial;
  CheckResult result;
};

struct CheckSummary {
  std::string label;  // check_label() plus ":side<s>" when sided
  std::size_t count = 0;
  std::size_t failures = 0;
  /// Smallest finite margin seen (NaN if none).
  double min_margin;
};

struct Report {
  std::vector<GenSpec> specs;
  std::size_t trials = 0;
  CheckOptions options;
  /// Ordered by (spec, check position, trial); independent of scheduling.
  std::vector<SuiteEntry> entries;
  /// One row per distinct check key, in first-appearance order.
  std::vector<CheckSummary> summary;
  std::size_t failures = 0;
  double wall_seconds = 0.0;

  bool all_pass() const { return failures == 0; }
};

/// Summary key for one result, e.g. "thompson:side2" or "tensor-three:r3".
std::string summary_key(const CheckResult& r);

/// Operands for (spec, trial): three independent draws seeded by
/// mix_seed(spec.seed, 3 * trial + {0, 1, 2}).
std::vector<BlockMat> trial_operands(const GenSpec& spec, std::size_t trial);

/// Runs evaluate_trial on `trials` operand triples per spec. Trials run in
/// parallel when OpenMP is available; results are gathered in index order.
/// Throws InvalidArgument when trials == 0 or specs is empty.
Report run_suite(std::span<const GenSpec> specs, std::size_t trials,
                 const CheckOptions& opt = {});

/// Single-threaded reference for run_suite; same entries, same order.
Report run_suite_serial(std::span<const GenSpec> specs, std::size_t trials,
                        const CheckOptions& opt = {});

}  // namespace partialmat

#endif
