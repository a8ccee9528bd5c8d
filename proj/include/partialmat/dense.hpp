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

#ifndef PARTIALMAT_DENSE_HPP
#define PARTIALMAT_DENSE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "partialmat/complex_mat.hpp"
#include "partialmat/tolerance.hpp"

namespace partialmat {

/// Below this order the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelMinDim = 64;

ComplexMat matmul(const ComplexMat& a, const ComplexMat& b);

/// Kronecker product: entry (i*db + l, j*db + m) = a(i,j) * b(l,m).
ComplexMat kron(const ComplexMat& a, const ComplexMat& b);

/// r-fold Kronecker power, folded from the left: ((a ⊗ a) ⊗ a) ⊗ ...
/// Throws InvalidArgument for r == 0.
ComplexMat tensor_power(const ComplexMat& a, std::size_t r);

ComplexMat submatrix(const ComplexMat& a, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols);

/// r-th multiplicative compound: rows/columns indexed by lexicographic
/// r-subsets, entry (S,T) = det a[S,T]. Throws InvalidArgument unless
/// 1 <= r <= dim.
ComplexMat compound(const ComplexMat& a, std::size_t r);

/// LU with partial pivoting. Exactly singular pivots give 0.
Complex det(const ComplexMat& a);

/// Determinant of a Hermitian matrix as a real number. Throws NotHermitian
/// when the imaginary part of det(a) exceeds the tolerance bound.
double hermitian_det(const ComplexMat& a, const Tolerance& tol = {});

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi sweeps.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// 1e-14 * ||a||_F. Throws NotHermitian when a is not Hermitian within
/// tol, and NoConvergence after kMaxJacobiSweeps.
std::vector<double> eig_hermitian(const ComplexMat& a, const Tolerance& tol = {});

inline constexpr int kMaxJacobiSweeps = 100;

/// Smallest eigenvalue of a Hermitian matrix.
double lambda_min(const ComplexMat& a, const Tolerance& tol = {});

/// lambda_min of the Hermitianized difference (a - b). A value >= -bound
/// means a >= b holds numerically in the Loewner order.
double loewner_margin(const ComplexMat& a, const ComplexMat& b,
                      const Tolerance& tol = {});

/// Reference kernels: single-threaded, straightforward loops. Kept for the
/// test suite and the benchmarks; results are bit-identical to the
/// parallel versions.
namespace serial {

ComplexMat matmul(const ComplexMat& a, const ComplexMat& b);
ComplexMat kron(const ComplexMat& a, const ComplexMat& b);
ComplexMat tensor_power(const ComplexMat& a, std::size_t r);
ComplexMat compound(const ComplexMat& a, std::size_t r);

}  // namespace serial

}  // namespace partialmat

#endif
