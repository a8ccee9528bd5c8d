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

#include "partialmat/suite.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "partialmat/error.hpp"

namespace partialmat {

namespace {

using TrialResults = std::vector<std::vector<CheckResult>>;

std::vector<CheckResult> run_one(const GenSpec& spec, std::size_t trial,
                                 const CheckOptions& opt) {
  try {
    const auto ops = trial_operands(spec, trial);
    return evaluate_trial(ops[0], ops[1], ops[2], opt);
  } catch (const std::exception& e) {
    CheckResult r;
    r.check_name = "generate";
    r.margin = std::numeric_limits<double>::quiet_NaN();
    r.error = e.what();
    return {std::move(r)};
  }
}

Report assemble(std::span<const GenSpec> specs, std::size_t trials, const CheckOptions& opt,
                TrialResults results, double seconds) {
  Report rep;
  rep.specs.assign(specs.begin(), specs.end());
  rep.trials = trials;
  rep.options = opt;
  rep.wall_seconds = seconds;

  std::map<std::string, std::size_t> slot;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    std::size_t width = 0;
    for (std::size_t t = 0; t < trials; ++t) width = std::max(width, results[s * trials + t].size());
    for (std::size_t c = 0; c < width; ++c) {
      for (std::size_t t = 0; t < trials; ++t) {
        auto& row = results[s * trials + t];
        if (c >= row.size()) continue;
        CheckResult& r = row[c];
        const std::string key = summary_key(r);
        auto [it, inserted] = slot.try_emplace(key, rep.summary.size());
        if (inserted) {
          rep.summary.push_back({key, 0, 0, std::numeric_limits<double>::quiet_NaN()});
        }
        CheckSummary& sum = rep.summary[it->second];
        ++sum.count;
        if (!r.pass) {
          ++sum.failures;
          ++rep.failures;
        }
        if (std::isfinite(r.margin) && !(r.margin >= sum.min_margin)) sum.min_margin = r.margin;
        rep.entries.push_back({specs[s].ensemble, specs[s].n, specs[s].k, t, std::move(r)});
      }
    }
  }
  return rep;
}

void validate(std::span<const GenSpec> specs, std::size_t trials) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (specs.empty()) throw Error(ErrorKind::InvalidArgument, "no generator specs given");
}

}  // namespace

std::string summary_key(const CheckResult& r) {
  std::string key = check_label(r);
  if (r.side) key += ":side" + std::to_string(*r.side);
  return key;
}

std::vector<BlockMat> trial_operands(const GenSpec& spec, std::size_t trial) {
  std::vector<BlockMat> ops;
  ops.reserve(3);
  for (std::uint64_t which = 0; which < 3; ++which) {
    GenSpec s = spec;
    s.seed = mix_seed(spec.seed, 3 * static_cast<std::uint64_t>(trial) + which);
    ops.push_back(generate(s));
  }
  return ops;
}

Report run_suite(std::span<const GenSpec> specs, std::size_t trials, const CheckOptions& opt) {
  validate(specs, trials);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t total = specs.size() * trials;
  TrialResults results(total);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(total); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    results[i] = run_one(specs[i / trials], i % trials, opt);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return assemble(specs, trials, opt, std::move(results), seconds);
}

Report run_suite_serial(std::span<const GenSpec> specs, std::size_t trials,
                        const CheckOptions& opt) {
  validate(specs, trials);
  const auto start = std::chrono::steady_clock::now();
  TrialResults results(specs.size() * trials);
  for (std::size_t i = 0; i < results.size(); ++i)
    results[i] = run_one(specs[i / trials], i % trials, opt);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return assemble(specs, trials, opt, std::move(results), seconds);
}

}  // namespace partialmat
