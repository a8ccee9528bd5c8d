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

#include "partialmat/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "json.hpp"

namespace partialmat {

namespace {

using nlohmann::ordered_json;

ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

ordered_json record(const CheckResult& r) {
  ordered_json j;
  j["check"] = r.check_name;
  if (r.side) j["side"] = *r.side;
  if (r.variant) j["variant"] = *r.variant;
  if (r.order) j["r"] = *r.order;
  if (r.scalar_lhs) j["scalar_lhs"] = number_or_null(*r.scalar_lhs);
  if (r.scalar_rhs) j["scalar_rhs"] = number_or_null(*r.scalar_rhs);
  if (r.matrix_margin) j["matrix_margin"] = number_or_null(*r.matrix_margin);
  j["margin"] = number_or_null(r.margin);
  j["pass"] = r.pass;
  j["tol_used"] = r.tol_used;
  j["input_digest"] = r.input_digest;
  if (r.error) j["error"] = *r.error;
  return j;
}

}  // namespace

std::string check_result_json(const CheckResult& r) { return record(r).dump(); }

void write_report_json(std::ostream& os, const Report& rep, const ReportMeta& meta) {
  ordered_json md;
  md["tool"] = "partialmat";
  md["version"] = PARTIALMAT_VERSION;
  if (meta.seed) md["seed"] = *meta.seed;
  md["trials"] = rep.trials;
  ordered_json specs = ordered_json::array();
  for (const GenSpec& s : rep.specs) {
    ordered_json js;
    js["ensemble"] = std::string(to_string(s.ensemble));
    js["n"] = s.n;
    js["k"] = s.k;
    if (s.rank) js["rank"] = *s.rank;
    js["seed"] = s.seed;
    specs.push_back(std::move(js));
  }
  md["specs"] = std::move(specs);
  md["tol_abs"] = rep.options.tol.abs;
  md["tol_rel"] = rep.options.tol.rel;
  md["tensor_cap"] = rep.options.tensor_cap;
  md["checks_total"] = rep.entries.size();
  md["failures"] = rep.failures;
  if (!meta.timestamp.empty()) md["timestamp"] = meta.timestamp;
  if (meta.include_duration) md["duration_seconds"] = rep.wall_seconds;

  ordered_json summary = ordered_json::array();
  for (const CheckSummary& s : rep.summary) {
    ordered_json js;
    js["check"] = s.label;
    js["count"] = s.count;
    js["failures"] = s.failures;
    js["min_margin"] = number_or_null(s.min_margin);
    summary.push_back(std::move(js));
  }

  os << "{\n\"metadata\": " << md.dump() << ",\n\"summary\": " << summary.dump()
     << ",\n\"results\": [";
  bool first = true;
  for (const SuiteEntry& e : rep.entries) {
    ordered_json j;
    j["ensemble"] = std::string(to_string(e.ensemble));
    j["n"] = e.n;
    j["k"] = e.k;
    j["trial"] = e.trial;
    j.update(record(e.result));
    os << (first ? "\n" : ",\n") << j.dump();
    first = false;
  }
  os << "\n]\n}\n";
}

void write_report_csv(std::ostream& os, const Report& rep) {
  os << "check,side,n,k,trial,margin,pass\n";
  char margin[40];
  for (const SuiteEntry& e : rep.entries) {
    const CheckResult& r = e.result;
    std::snprintf(margin, sizeof margin, "%.17g", r.margin);
    os << check_label(r) << ',';
    if (r.side) os << *r.side;
    os << ',' << e.n << ',' << e.k << ',' << e.trial << ',' << margin << ','
       << (r.pass ? "true" : "false") << '\n';
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace partialmat
