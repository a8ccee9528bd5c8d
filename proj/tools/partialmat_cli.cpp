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

// partialmat command-line front end.
//
//   partialmat gen   --ensemble ginibre --n 2 --k 2 --seed 7 [--rank R] [--out FILE]
//   partialmat check NAME --in FILE... [--side 1|2] [--realigned] [--r R]
//                    [--which fan-ky|am-gm|fiedler-markham|choi]
//   partialmat suite [--trials N] [--seed S] [--dims 2x2,3x2] [--ensembles ...]
//                    [--out FILE] [--format json|csv]
//
// Exit codes: 0 pass, 1 check failure, 2 bad flags or input, 3 non-PSD input.
// PARTIALMAT_TOL_REL / PARTIALMAT_TOL_ABS override the default tolerances;
// --tol-rel / --tol-abs override both.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partialmat/catalog.hpp"
#include "partialmat/error.hpp"
#include "partialmat/matrix_file.hpp"
#include "partialmat/psd.hpp"
#include "partialmat/report.hpp"
#include "partialmat/suite.hpp"

namespace pm = partialmat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotPsd = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<double> env_double(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const double d = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(d >= 0.0)) {
    throw UsageError(std::string(name) + " is not a nonnegative number: " + v);
  }
  return d;
}

struct TolFlags {
  std::optional<double> rel;
  std::optional<double> abs;

  pm::Tolerance resolve() const {
    pm::Tolerance t;
    if (auto e = env_double("PARTIALMAT_TOL_REL")) t.rel = *e;
    if (auto e = env_double("PARTIALMAT_TOL_ABS")) t.abs = *e;
    if (rel) t.rel = *rel;
    if (abs) t.abs = *abs;
    return t;
  }
};

void add_tol_flags(CLI::App* cmd, TolFlags& tol) {
  cmd->add_option("--tol-rel", tol.rel, "Relative tolerance (default 1e-9)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol-abs", tol.abs, "Absolute tolerance (default 1e-12)")
      ->check(CLI::NonNegativeNumber);
}

// ---- gen ----

struct GenFlags {
  std::string ensemble = "ginibre";
  long long n = 0;
  long long k = 0;
  std::optional<long long> rank;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenFlags& f) {
  const auto ens = pm::parse_ensemble(f.ensemble);
  if (!ens) throw UsageError("unknown ensemble '" + f.ensemble + "'");
  if (f.n <= 0 || f.k <= 0) throw UsageError("--n and --k must be positive");
  if (f.rank && *f.rank <= 0) throw UsageError("--rank must be positive");
  pm::GenSpec spec;
  spec.ensemble = *ens;
  spec.n = static_cast<std::size_t>(f.n);
  spec.k = static_cast<std::size_t>(f.k);
  if (f.rank) spec.rank = static_cast<std::size_t>(*f.rank);
  spec.seed = f.seed;
  const pm::BlockMat h = pm::generate(spec);
  if (f.out.empty() || f.out == "-") {
    std::cout << pm::serialize_matrix(h);
  } else {
    pm::write_matrix_file(f.out, h);
  }
  return kExitPass;
}

// ---- check ----

struct CheckFlags {
  std::string name;
  std::vector<std::string> inputs;
  int side = 2;
  bool realigned = false;
  long long r = 2;
  std::string which;
  TolFlags tol;
};

pm::Side side_of(int s) {
  if (s == 1) return pm::Side::One;
  if (s == 2) return pm::Side::Two;
  throw UsageError("--side must be 1 or 2");
}

int run_check(const CheckFlags& f) {
  pm::CheckOptions opt;
  opt.tol = f.tol.resolve();

  std::vector<pm::BlockMat> in;
  for (const auto& path : f.inputs) in.push_back(pm::read_matrix_file(path));
  auto need = [&](std::size_t count) {
    if (in.size() != count) {
      throw UsageError("check " + f.name + " takes " + std::to_string(count) +
                       " input file(s), got " + std::to_string(in.size()));
    }
  };
  if (f.r <= 0) throw UsageError("--r must be positive");
  const auto r = static_cast<std::size_t>(f.r);

  pm::CheckResult res;
  const std::string& name = f.name;
  if (name == "fischer") {
    need(1);
    res = pm::check_fischer(in[0], f.realigned, opt);
  } else if (name == "thompson") {
    need(1);
    res = pm::check_thompson(in[0], side_of(f.side), opt);
  } else if (name == "fiedler-markham") {
    need(1);
    res = pm::check_fiedler_markham(in[0], side_of(f.side), opt);
  } else if (name == "choi") {
    need(1);
    res = pm::check_choi(in[0], side_of(f.side), opt);
  } else if (name == "mean-bounds") {
    need(1);
    pm::MeanBound mb;
    if (f.which.empty() || f.which == "fan-ky") {
      mb = pm::MeanBound::FanKy;
    } else if (f.which == "am-gm") {
      mb = pm::MeanBound::AmGm;
    } else {
      throw UsageError("--which for mean-bounds must be fan-ky or am-gm");
    }
    res = pm::check_mean_bounds(in[0], mb, opt);
  } else if (name == "chain") {
    need(1);
    pm::ChainBound cb;
    if (f.which.empty() || f.which == "fiedler-markham") {
      cb = pm::ChainBound::FiedlerMarkham;
    } else if (f.which == "choi") {
      cb = pm::ChainBound::Choi;
    } else {
      throw UsageError("--which for chain must be fiedler-markham or choi");
    }
    res = pm::check_chain_bound(in[0], cb, opt);
  } else if (name == "superadd") {
    need(2);
    res = pm::check_superadd_partial_det(in[0], in[1], side_of(f.side), opt);
  } else if (name == "tensor-three") {
    need(3);
    res = pm::check_tensor_three(in[0].mat(), in[1].mat(), in[2].mat(), r, opt);
  } else if (name == "tensor-two-common") {
    need(3);
    res = pm::check_tensor_two_common(in[0].mat(), in[1].mat(), in[2].mat(), r, opt);
  } else if (name == "det-three") {
    need(3);
    res = pm::check_partial_det_three(in[0], in[1], in[2], side_of(f.side), opt);
  } else if (name == "det-three-common") {
    need(3);
    res = pm::check_partial_det_three_common(in[0], in[1], in[2], side_of(f.side), opt);
  } else {
    throw UsageError("unknown check '" + name + "'");
  }
  std::cout << pm::check_result_json(res) << "\n";
  return res.pass ? kExitPass : kExitFail;
}

// ---- suite ----

struct SuiteFlags {
  long long trials = 1000;
  std::uint64_t seed = 0;
  std::string dims = "2x2,3x2,2x3,2x4,4x2";
  std::string ensembles = "all";
  std::string out;
  std::string format = "json";
  TolFlags tol;
};

std::vector<std::pair<std::size_t, std::size_t>> parse_dims(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    std::size_t n = 0;
    std::size_t k = 0;
    try {
      if (x == std::string::npos) throw std::invalid_argument(item);
      std::size_t used = 0;
      n = std::stoul(item.substr(0, x), &used);
      if (used != x) throw std::invalid_argument(item);
      k = std::stoul(item.substr(x + 1), &used);
      if (used != item.size() - x - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad --dims entry '" + item + "' (expected NxK)");
    }
    if (n == 0 || k == 0) throw UsageError("--dims entries must be positive: '" + item + "'");
    dims.emplace_back(n, k);
  }
  if (dims.empty()) throw UsageError("--dims is empty");
  return dims;
}

std::vector<pm::Ensemble> parse_ensembles(const std::string& text) {
  if (text == "all") return {std::begin(pm::kAllEnsembles), std::end(pm::kAllEnsembles)};
  std::vector<pm::Ensemble> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto e = pm::parse_ensemble(item);
    if (!e) throw UsageError("unknown ensemble '" + item + "'");
    out.push_back(*e);
  }
  if (out.empty()) throw UsageError("--ensembles is empty");
  return out;
}

int run_suite(const SuiteFlags& f) {
  if (f.trials <= 0) throw UsageError("--trials must be positive");
  if (f.format != "json" && f.format != "csv") throw UsageError("--format must be json or csv");
  pm::CheckOptions opt;
  opt.tol = f.tol.resolve();
  const auto dims = parse_dims(f.dims);
  const auto ensembles = parse_ensembles(f.ensembles);

  // Each (ensemble, dims) pair gets its own base seed so that different
  // pairs never share operand streams.
  std::vector<pm::GenSpec> specs;
  for (const auto& [n, k] : dims) {
    for (pm::Ensemble e : ensembles) {
      pm::GenSpec s;
      s.ensemble = e;
      s.n = n;
      s.k = k;
      if (e == pm::Ensemble::WishartRankR) s.rank = n * k > 1 ? n * k - 1 : 1;
      s.seed = pm::mix_seed(f.seed, static_cast<std::uint64_t>(specs.size()) + 1);
      specs.push_back(s);
    }
  }

  const pm::Report rep = pm::run_suite(specs, static_cast<std::size_t>(f.trials), opt);
  pm::ReportMeta meta;
  meta.seed = f.seed;
  meta.timestamp = pm::utc_timestamp();

  auto write = [&](std::ostream& os) {
    if (f.format == "csv") {
      pm::write_report_csv(os, rep);
    } else {
      pm::write_report_json(os, rep, meta);
    }
  };
  // The report goes to --out (or stdout); the summary goes to stdout when
  // the report has its own file and to stderr otherwise.
  const bool to_stdout = f.out.empty() || f.out == "-";
  if (to_stdout) {
    write(std::cout);
  } else {
    std::ofstream os(f.out);
    if (!os) throw UsageError("cannot write " + f.out);
    write(os);
  }
  std::ostream& log = to_stdout ? std::cerr : std::cout;
  for (const auto& s : rep.summary) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-32s count=%-6zu failures=%-4zu min_margin=%.6e",
                  s.failures == 0 ? "PASS" : "FAIL", s.label.c_str(), s.count, s.failures,
                  s.min_margin);
    log << line << "\n";
  }
  log << (rep.all_pass() ? "PASS" : "FAIL") << " total=" << rep.entries.size()
      << " failures=" << rep.failures << " seconds=" << rep.wall_seconds << "\n";
  return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial trace / partial determinant inequality harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PARTIALMAT_VERSION);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a PSD block matrix file");
  gen_cmd->add_option("--ensemble", gen.ensemble,
                      "ginibre | wishart-rank-r | kron-structured | equality-case | diag-random");
  gen_cmd->add_option("--n", gen.n, "Outer block count")->required();
  gen_cmd->add_option("--k", gen.k, "Inner block order")->required();
  gen_cmd->add_option("--rank", gen.rank, "Wishart factor rank (default nk-1)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  CheckFlags chk;
  auto* chk_cmd = app.add_subcommand("check", "Run one inequality check on matrix files");
  chk_cmd->add_option("name", chk.name,
                      "fischer | thompson | fiedler-markham | choi | mean-bounds | chain | "
                      "superadd | tensor-three | tensor-two-common | det-three | "
                      "det-three-common")
      ->required();
  chk_cmd->add_option("--in", chk.inputs, "Input matrix file(s)")->required()->expected(1, 3);
  chk_cmd->add_option("--side", chk.side, "Partial side 1 or 2 (default 2)");
  chk_cmd->add_flag("--realigned", chk.realigned, "fischer: use the realigned blocks");
  chk_cmd->add_option("--r", chk.r, "Tensor order for tensor checks (default 2)");
  chk_cmd->add_option("--which", chk.which, "mean-bounds: fan-ky|am-gm; chain: fiedler-markham|choi");
  add_tol_flags(chk_cmd, chk.tol);

  SuiteFlags suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run the full catalog over generated matrices");
  suite_cmd->add_option("--trials", suite.trials, "Trials per (ensemble, dims)");
  suite_cmd->add_option("--seed", suite.seed, "Base seed");
  suite_cmd->add_option("--dims", suite.dims, "Comma-separated NxK list");
  suite_cmd->add_option("--ensembles", suite.ensembles, "Comma-separated ensembles or 'all'");
  suite_cmd->add_option("--out", suite.out, "Report path (default stdout)");
  suite_cmd->add_option("--format", suite.format, "json | csv");
  add_tol_flags(suite_cmd, suite.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*chk_cmd) return run_check(chk);
    if (*suite_cmd) return run_suite(suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case pm::ErrorKind::NotPSD:
      case pm::ErrorKind::NotHermitian:
        return kExitNotPsd;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}
