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

#ifndef PARTIALMAT_CATALOG_HPP
#define PARTIALMAT_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partialmat/block.hpp"
#include "partialmat/complex_mat.hpp"
#include "partialmat/tolerance.hpp"

namespace partialmat {

/// Outcome of one inequality check.
///
/// margin is the signed slack lhs - rhs (scalar checks) or lambda_min of
/// lhs - rhs (Loewner-order checks); pass == (margin >= -tol_used).
/// Exactly one of {scalar_lhs and scalar_rhs, matrix_margin} is set.
struct CheckResult {
  std::string check_name;
  std::optional<int> side;
  /// Sub-kind for checks that have one: "plain"/"realigned" for fischer,
  /// "fan-ky"/"am-gm" for mean-bounds, "fiedler-markham"/"choi" for chain.
  std::optional<std::string> variant;
  /// Tensor order r for the tensor checks.
  std::optional<int> order;
  std::optional<double> scalar_lhs;
  std::optional<double> scalar_rhs;
  std::optional<double> matrix_margin;
  double margin = 0.0;
  bool pass = false;
  double tol_used = 0.0;
  /// FNV-1a 64 of the operand dimensions and entry bytes, 16 hex digits.
  std::string input_digest;
  /// Set when the check could not be evaluated; pass is then false.
  std::optional<std::string> error;
};

/// Unique, human-readable key such as "fischer:realigned" or
/// "tensor-three:r2" (side is not included; see CheckResult::side).
std::string check_label(const CheckResult& r);

struct CheckOptions {
  Tolerance tol;
  /// Tensor checks refuse dim^r above this.
  std::size_t tensor_cap = kDefaultTensorCap;
  /// When false the operands are trusted to be PSD (the suite validates
  /// each generated matrix once instead of once per check).
  bool validate_inputs = true;
};

enum class MeanBound { FanKy, AmGm };
enum class ChainBound { FiedlerMarkham, Choi };

// Block-matrix checks. All throw NotPSD on a non-PSD operand.

/// prod det H_ii - det H, or prod det G_ll - det H when realigned.
CheckResult check_fischer(const BlockMat& h, bool realigned, const CheckOptions& opt = {});

/// det(partial_det(h, side)) - det H.
CheckResult check_thompson(const BlockMat& h, Side side, const CheckOptions& opt = {});

/// Side::Two: (det tr_2 H / k^n)^k - det H; Side::One: (det tr_1 H / n^k)^n - det H.
CheckResult check_fiedler_markham(const BlockMat& h, Side side, const CheckOptions& opt = {});

/// Side::One: (tr det_1 H / k)^k - det H; Side::Two: (tr det_2 H / n)^n - det H.
CheckResult check_choi(const BlockMat& h, Side side, const CheckOptions& opt = {});

/// Over the diagonal realigned blocks G_ll (d_l = det G_ll, clamped at 0
/// inside the geometric mean):
///   FanKy  det(sum G_ll) - k^n (prod d_l)^{1/k}
///   AmGm   mean(d_l) - (prod d_l)^{1/k}
CheckResult check_mean_bounds(const BlockMat& h, MeanBound which, const CheckOptions& opt = {});

/// First link of the two-step chains ending in prod det G_ll >= det H
/// (the second link is check_fischer(h, true)):
///   FiedlerMarkham  (det tr_2 H / k^n)^k - prod det G_ll
///   Choi            (tr det_1 H / k)^k - prod det G_ll
CheckResult check_chain_bound(const BlockMat& h, ChainBound which, const CheckOptions& opt = {});

/// lambda_min(det_s(a+b) - det_s(a) - det_s(b)). Throws DimMismatch.
CheckResult check_superadd_partial_det(const BlockMat& a, const BlockMat& b, Side side,
                                       const CheckOptions& opt = {});

/// lambda_min of
///   ⊗^r(a+b+c) + ⊗^r a + ⊗^r b + ⊗^r c - ⊗^r(a+b) - ⊗^r(a+c) - ⊗^r(b+c).
/// Throws DimMismatch, NotPSD, CapExceeded.
CheckResult check_tensor_three(const ComplexMat& a, const ComplexMat& b, const ComplexMat& c,
                               std::size_t r, const CheckOptions& opt = {});

/// lambda_min of ⊗^r(a+b+c) + ⊗^r c - ⊗^r(a+c) - ⊗^r(b+c).
CheckResult check_tensor_two_common(const ComplexMat& a, const ComplexMat& b,
                                    const ComplexMat& c, std::size_t r,
                                    const CheckOptions& opt = {});

/// Loewner margin of
///   det_s(a+b+c) + det_s a + det_s b + det_s c  vs  det_s(a+b) + det_s(a+c) + det_s(b+c).
CheckResult check_partial_det_three(const BlockMat& a, const BlockMat& b, const BlockMat& c,
                                    Side side, const CheckOptions& opt = {});

/// Loewner margin of det_s(a+b+c) + det_s c  vs  det_s(a+c) + det_s(b+c).
CheckResult check_partial_det_three_common(const BlockMat& a, const BlockMat& b,
                                           const BlockMat& c, Side side,
                                           const CheckOptions& opt = {});

/// Order of the leading principal submatrix of H_11 fed to the tensor
/// checks by evaluate_trial.
inline constexpr std::size_t kTensorOperandDim = 3;

/// Every catalog check on one operand triple, in a fixed order: the
/// single-matrix checks on a, superadditivity on (a, b), tensor checks
/// for r = 1, 2, 3 on the leading principal parts of a_11, b_11, c_11
/// (skipped when over the cap), then the three-term partial determinant
/// checks. Failures to evaluate are recorded, never thrown.
std::vector<CheckResult> evaluate_trial(const BlockMat& a, const BlockMat& b,
                                        const BlockMat& c, const CheckOptions& opt = {});

/// Leading principal submatrix of H_11 of order min(k, kTensorOperandDim).
ComplexMat tensor_operand(const BlockMat& h);

}  // namespace partialmat

#endif
