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

#ifndef PARTIALMAT_REPORT_HPP
#define PARTIALMAT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "partialmat/catalog.hpp"
#include "partialmat/suite.hpp"

namespace partialmat {

struct ReportMeta {
  std::optional<std::uint64_t> seed;
  /// ISO-8601 UTC; omitted from the file when empty.
  std::string timestamp;
  bool include_duration = true;
};

/// One CheckResult as a single-line JSON object. Absent optionals are
/// omitted; a non-finite margin is written as null.
std::string check_result_json(const CheckResult& r);

/// Report file layout:
///   {"metadata": {...}, "summary": [...], "results": [ one record per line ]}
/// Records carry ensemble, n, k and trial in addition to the CheckResult
/// fields. Output is a pure function of the report apart from the
/// "timestamp" and "duration_seconds" metadata keys.
void write_report_json(std::ostream& os, const Report& rep, const ReportMeta& meta);

/// Header `check,side,n,k,trial,margin,pass`; check holds check_label().
void write_report_csv(std::ostream& os, const Report& rep);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace partialmat

#endif
