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

#include "partialmat/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>

#include "partialmat/dense.hpp"
#include "partialmat/error.hpp"
#include "partialmat/psd.hpp"

namespace partialmat {

namespace {

std::string digest(std::initializer_list<const ComplexMat*> mats) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const void* p, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  for (const ComplexMat* m : mats) {
    const std::uint64_t dim = m->dim();
    feed(&dim, sizeof dim);
    for (const Complex& z : m->entries()) {
      const double parts[2] = {z.real(), z.imag()};
      feed(parts, sizeof parts);
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void require_psd(const ComplexMat& m, const CheckOptions& opt, const char* what) {
  if (!opt.validate_inputs) return;
  const PsdStatus s = is_psd(m, opt.tol);
  if (!s.psd) {
    throw Error(ErrorKind::NotPSD,
                std::string(what) + " has lambda_min " + std::to_string(s.margin));
  }
}

void require_same_partition(const BlockMat& a, const BlockMat& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw Error(ErrorKind::DimMismatch, "operands have different block partitions");
  }
}

void finish(CheckResult& r, double margin, double scale, const Tolerance& tol) {
  r.margin = margin;
  r.tol_used = tol.bound(scale);
  r.pass = margin >= -r.tol_used;
}

// lhs = (prod factors)^power against rhs. When every quantity is strictly
// positive the comparison runs in log domain and the margin is recovered as
// rhs * expm1(log lhs - log rhs), which keeps relative accuracy near
// equality.
void scalar_compare(CheckResult& r, std::span<const double> factors, double power,
                    double rhs, const Tolerance& tol) {
  const bool all_positive =
      rhs > 0.0 && std::all_of(factors.begin(), factors.end(), [](double f) { return f > 0.0; });
  double lhs;
  double margin;
  if (all_positive) {
    double log_lhs = 0.0;
    for (double f : factors) log_lhs += std::log(f);
    log_lhs *= power;
    const double log_rhs = std::log(rhs);
    lhs = std::exp(log_lhs);
    margin = rhs * std::expm1(log_lhs - log_rhs);
  } else {
    double base = 1.0;
    for (double f : factors) base *= f;
    lhs = std::pow(base, power);
    margin = lhs - rhs;
  }
  r.scalar_lhs = lhs;
  r.scalar_rhs = rhs;
  finish(r, margin, std::max(std::abs(lhs), std::abs(rhs)), tol);
}

void matrix_compare(CheckResult& r, const ComplexMat& lhs, const ComplexMat& rhs,
                    const Tolerance& tol) {
  const double m = loewner_margin(lhs, rhs, tol);
  r.matrix_margin = m;
  finish(r, m, std::max(lhs.max_abs(), rhs.max_abs()), tol);
}

double ipow(double base, std::size_t e) {
  double out = 1.0;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Determinants of the diagonal realigned blocks G_ll.
std::vector<double> realigned_diagonal_dets(const BlockMat& h, const Tolerance& tol) {
  const BlockMat g = realign(h);
  std::vector<double> d(g.n());
  for (std::size_t l = 0; l < g.n(); ++l) d[l] = hermitian_det(g.block(l, l), tol);
  return d;
}

double geometric_mean_clamped(std::span<const double> d) {
  double log_sum = 0.0;
  for (double v : d) {
    if (v <= 0.0) return 0.0;
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(d.size()));
}

double product(std::span<const double> d) {
  double p = 1.0;
  for (double v : d) p *= v;
  return p;
}

CheckResult named(std::string name, std::string dig) {
  CheckResult r;
  r.check_name = std::move(name);
  r.input_digest = std::move(dig);
  return r;
}

ComplexMat partial_det_sum(std::initializer_list<const BlockMat*> terms, Side side) {
  auto it = terms.begin();
  ComplexMat sum = partial_det(**it, side);
  for (++it; it != terms.end(); ++it) sum += partial_det(**it, side);
  return sum;
}

void require_tensor_operands(const ComplexMat& a, const ComplexMat& b, const ComplexMat& c,
                             std::size_t r, const CheckOptions& opt) {
  if (a.dim() != b.dim() || a.dim() != c.dim()) {
    throw Error(ErrorKind::DimMismatch, "tensor operands have different orders");
  }
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "tensor order must be >= 1");
  std::size_t d = 1;
  for (std::size_t t = 0; t < r; ++t) {
    d *= a.dim();
    if (d > opt.tensor_cap) {
      throw Error(ErrorKind::CapExceeded,
                  "tensor power order exceeds cap " + std::to_string(opt.tensor_cap));
    }
  }
  require_psd(a, opt, "a");
  require_psd(b, opt, "b");
  require_psd(c, opt, "c");
}

}  // namespace

std::string check_label(const CheckResult& r) {
  std::string s = r.check_name;
  if (r.variant) s += ":" + *r.variant;
  if (r.order) s += ":r" + std::to_string(*r.order);
  return s;
}

CheckResult check_fischer(const BlockMat& h, bool realigned, const CheckOptions& opt) {
  require_psd(h.mat(), opt, "h");
  CheckResult r = named("fischer", digest({&h.mat()}));
  r.variant = realigned ? "realigned" : "plain";
  std::vector<double> factors;
  if (realigned) {
    factors = realigned_diagonal_dets(h, opt.tol);
  } else {
    for (std::size_t i = 0; i < h.n(); ++i) factors.push_back(hermitian_det(h.block(i, i), opt.tol));
  }
  scalar_compare(r, factors, 1.0, hermitian_det(h.mat(), opt.tol), opt.tol);
  return r;
}

CheckResult check_thompson(const BlockMat& h, Side side, const CheckOptions& opt) {
  require_psd(h.mat(), opt, "h");
  CheckResult r = named("thompson", digest({&h.mat()}));
  r.side = static_cast<int>(side);
  const double lhs = hermitian_det(partial_det(h, side), opt.tol);
  scalar_compare(r, std::span<const double>(&lhs, 1), 1.0, hermitian_det(h.mat(), opt.tol),
                 opt.tol);
  return r;
}

CheckResult check_fiedler_markham(const BlockMat& h, Side side, const CheckOptions& opt) {
  require_psd(h.mat(), opt, "h");
  CheckResult r = named("fiedler-markham", digest({&h.mat()}));
  r.side = static_cast<int>(side);
  // The reduced matrix has order `inner`; the outer count is the power.
  const std::size_t outer = side == Side::Two ? h.k() : h.n();
  const std::size_t inner = side == Side::Two ? h.n() : h.k();
  const double factors[2] = {hermitian_det(partial_trace(h, side), opt.tol),
                             1.0 / ipow(static_cast<double>(outer), inner)};
  scalar_compare(r, factors, static_cast<double>(outer), hermitian_det(h.mat(), opt.tol),
                 opt.tol);
  return r;
}

CheckResult check_choi(const BlockMat& h, Side side, const CheckOptions& opt) {
  require_psd(h.mat(), opt, "h");
  CheckResult r = named("choi", digest({&h.mat()}));
  r.side = static_cast<int>(side);
  const ComplexMat pd = partial_det(h, side);
  const double mean = pd.trace().real() / static_cast<double>(pd.dim());
  scalar_compare(r, std::span<const double>(&mean, 1), static_cast<double>(pd.dim()),
                 hermitian_det(h.mat(), opt.tol), opt.tol);
  return r;
}

CheckResult check_mean_bounds(const BlockMat& h, MeanBound which, const CheckOptions& opt) {
  require_psd(h.mat(), opt, "h");
  CheckResult r = named("mean-bounds", digest({&h.mat()}));
  r.variant = which == MeanBound::FanKy ? "fan-ky" : "am-gm";
  const std::vector<double> d = realigned_diagonal_dets(h, opt.tol);
  const double gm = geometric_mean_clamped(d);
  double lhs;
  double rhs;
  if (which == MeanBound::FanKy) {
    lhs = hermitian_det(partial_trace(h, Side::Two), opt.tol);
    rhs = ipow(static_cast<double>(h.k()), h.n()) * gm;
  } else {
    double sum = 0.0;
    for (double v : d) sum += v;
    lhs = sum / static_cast<double>(d.size());
    rhs = gm;
  }
  r.scalar_lhs = lhs;
  r.scalar_rhs = rhs;
  finish(r, lhs - rhs, std::max(std::abs(lhs), std::abs(rhs)), opt.tol);
  return r;
}

CheckResult check_chain_bound(const BlockMat& h, ChainBound which, const CheckOptions& opt) {
  require_psd(h.mat(), opt, "h");
  CheckResult r = named("chain", digest({&h.mat()}));
  r.variant = which == ChainBound::FiedlerMarkham ? "fiedler-markham" : "choi";
  const double rhs = product(realigned_diagonal_dets(h, opt.tol));
  const double k = static_cast<double>(h.k());
  if (which == ChainBound::FiedlerMarkham) {
    const double factors[2] = {hermitian_det(partial_trace(h, Side::Two), opt.tol),
                               1.0 / ipow(k, h.n())};
    scalar_compare(r, factors, k, rhs, opt.tol);
  } else {
    const double mean = partial_det(h, Side::One).trace().real() / k;
    scalar_compare(r, std::span<const double>(&mean, 1), k, rhs, opt.tol);
  }
  return r;
}

CheckResult check_superadd_partial_det(const BlockMat& a, const BlockMat& b, Side side,
                                       const CheckOptions& opt) {
  require_same_partition(a, b);
  require_psd(a.mat(), opt, "a");
  require_psd(b.mat(), opt, "b");
  CheckResult r = named("superadd", digest({&a.mat(), &b.mat()}));
  r.side = static_cast<int>(side);
  matrix_compare(r, partial_det(a + b, side), partial_det_sum({&a, &b}, side), opt.tol);
  return r;
}

CheckResult check_tensor_three(const ComplexMat& a, const ComplexMat& b, const ComplexMat& c,
                               std::size_t r, const CheckOptions& opt) {
  require_tensor_operands(a, b, c, r, opt);
  CheckResult res = named("tensor-three", digest({&a, &b, &c}));
  res.order = static_cast<int>(r);
  ComplexMat lhs = tensor_power(a + b + c, r);
  lhs += tensor_power(a, r);
  lhs += tensor_power(b, r);
  lhs += tensor_power(c, r);
  ComplexMat rhs = tensor_power(a + b, r);
  rhs += tensor_power(a + c, r);
  rhs += tensor_power(b + c, r);
  matrix_compare(res, lhs, rhs, opt.tol);
  return res;
}

CheckResult check_tensor_two_common(const ComplexMat& a, const ComplexMat& b,
                                    const ComplexMat& c, std::size_t r,
                                    const CheckOptions& opt) {
  require_tensor_operands(a, b, c, r, opt);
  CheckResult res = named("tensor-two-common", digest({&a, &b, &c}));
  res.order = static_cast<int>(r);
  ComplexMat lhs = tensor_power(a + b + c, r);
  lhs += tensor_power(c, r);
  ComplexMat rhs = tensor_power(a + c, r);
  rhs += tensor_power(b + c, r);
  matrix_compare(res, lhs, rhs, opt.tol);
  return res;
}

CheckResult check_partial_det_three(const BlockMat& a, const BlockMat& b, const BlockMat& c,
                                    Side side, const CheckOptions& opt) {
  require_same_partition(a, b);
  require_same_partition(a, c);
  require_psd(a.mat(), opt, "a");
  require_psd(b.mat(), opt, "b");
  require_psd(c.mat(), opt, "c");
  CheckResult r = named("det-three", digest({&a.mat(), &b.mat(), &c.mat()}));
  r.side = static_cast<int>(side);
  const BlockMat ab = a + b;
  const BlockMat ac = a + c;
  const BlockMat bc = b + c;
  const BlockMat abc = ab + c;
  matrix_compare(r, partial_det_sum({&abc, &a, &b, &c}, side),
                 partial_det_sum({&ab, &ac, &bc}, side), opt.tol);
  return r;
}

CheckResult check_partial_det_three_common(const BlockMat& a, const BlockMat& b,
                                           const BlockMat& c, Side side,
                                           const CheckOptions& opt) {
  require_same_partition(a, b);
  require_same_partition(a, c);
  require_psd(a.mat(), opt, "a");
  require_psd(b.mat(), opt, "b");
  require_psd(c.mat(), opt, "c");
  CheckResult r = named("det-three-common", digest({&a.mat(), &b.mat(), &c.mat()}));
  r.side = static_cast<int>(side);
  const BlockMat ac = a + c;
  const BlockMat bc = b + c;
  const BlockMat abc = a + b + c;
  matrix_compare(r, partial_det_sum({&abc, &c}, side), partial_det_sum({&ac, &bc}, side),
                 opt.tol);
  return r;
}

ComplexMat tensor_operand(const BlockMat& h) {
  const std::size_t d = std::min(h.k(), kTensorOperandDim);
  ComplexMat out(d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t m = 0; m < d; ++m) out(l, m) = h.entry(0, 0, l, m);
  return out;
}

std::vector<CheckResult> evaluate_trial(const BlockMat& a, const BlockMat& b,
                                        const BlockMat& c, const CheckOptions& opt) {
  CheckOptions inner = opt;
  if (opt.validate_inputs) {
    inner.validate_inputs = false;
    for (const BlockMat* m : {&a, &b, &c}) {
      bool ok = false;
      try {
        ok = is_psd(m->mat(), opt.tol).psd;
      } catch (const Error&) {
      }
      // Let every check report the rejection itself.
      if (!ok) inner.validate_inputs = true;
    }
  }

  std::vector<CheckResult> out;
  auto run = [&out](std::string name, std::optional<int> side, std::optional<std::string> variant,
                    std::optional<int> order, const std::function<CheckResult()>& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      CheckResult r;
      r.check_name = std::move(name);
      r.side = side;
      r.variant = std::move(variant);
      r.order = order;
      r.margin = std::numeric_limits<double>::quiet_NaN();
      r.pass = false;
      r.error = e.what();
      out.push_back(std::move(r));
    }
  };

  for (bool realigned : {false, true})
    run("fischer", std::nullopt, realigned ? "realigned" : "plain", std::nullopt,
        [&] { return check_fischer(a, realigned, inner); });
  for (Side s : {Side::One, Side::Two})
    run("thompson", static_cast<int>(s), std::nullopt, std::nullopt,
        [&] { return check_thompson(a, s, inner); });
  for (Side s : {Side::One, Side::Two})
    run("fiedler-markham", static_cast<int>(s), std::nullopt, std::nullopt,
        [&] { return check_fiedler_markham(a, s, inner); });
  for (Side s : {Side::One, Side::Two})
    run("choi", static_cast<int>(s), std::nullopt, std::nullopt,
        [&] { return check_choi(a, s, inner); });
  run("mean-bounds", std::nullopt, "fan-ky", std::nullopt,
      [&] { return check_mean_bounds(a, MeanBound::FanKy, inner); });
  run("mean-bounds", std::nullopt, "am-gm", std::nullopt,
      [&] { return check_mean_bounds(a, MeanBound::AmGm, inner); });
  run("chain", std::nullopt, "fiedler-markham", std::nullopt,
      [&] { return check_chain_bound(a, ChainBound::FiedlerMarkham, inner); });
  run("chain", std::nullopt, "choi", std::nullopt,
      [&] { return check_chain_bound(a, ChainBound::Choi, inner); });
  for (Side s : {Side::One, Side::Two})
    run("superadd", static_cast<int>(s), std::nullopt, std::nullopt,
        [&] { return check_superadd_partial_det(a, b, s, inner); });

  const ComplexMat ta = tensor_operand(a);
  const ComplexMat tb = tensor_operand(b);
  const ComplexMat tc = tensor_operand(c);
  for (std::size_t r = 1; r <= 3; ++r) {
    if (ipow(static_cast<double>(ta.dim()), r) > static_cast<double>(opt.tensor_cap)) continue;
    run("tensor-three", std::nullopt, std::nullopt, static_cast<int>(r),
        [&] { return check_tensor_three(ta, tb, tc, r, inner); });
    run("tensor-two-common", std::nullopt, std::nullopt, static_cast<int>(r),
        [&] { return check_tensor_two_common(ta, tb, tc, r, inner); });
  }

  for (Side s : {Side::One, Side::Two})
    run("det-three", static_cast<int>(s), std::nullopt, std::nullopt,
        [&] { return check_partial_det_three(a, b, c, s, inner); });
  for (Side s : {Side::One, Side::Two})
    run("det-three-common", static_cast<int>(s), std::nullopt, std::nullopt,
        [&] { return check_partial_det_three_common(a, b, c, s, inner); });
  return out;
}

}  // namespace partialmat
