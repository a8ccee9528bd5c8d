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

#ifndef PARTIALMAT_BLOCK_HPP
#define PARTIALMAT_BLOCK_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "partialmat/complex_mat.hpp"

namespace partialmat {

/// An nk x nk matrix viewed as an n x n array of k x k blocks.
///
/// All indices are 0-based: block (i, j) occupies rows i*k .. i*k+k-1 and
/// columns j*k .. j*k+k-1, and entry(i, j, l, m) is element (l, m) of that
/// block.
class BlockMat {
 public:
  BlockMat() = default;
  BlockMat(std::size_t n, std::size_t k, ComplexMat mat);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const ComplexMat& mat() const noexcept { return mat_; }

  ComplexMat block(std::size_t i, std::size_t j) const;

  const Complex& entry(std::size_t i, std::size_t j, std::size_t l,
                       std::size_t m) const {
    return mat_(i * k_ + l, j * k_ + m);
  }

  BlockMat& operator+=(const BlockMat& other);
  friend BlockMat operator+(BlockMat lhs, const BlockMat& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool operator==(const BlockMat&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  ComplexMat mat_;
};

enum class Side { One = 1, Two = 2 };

/// The realigned matrix: outer dimension k, inner n, with block (l, m)
/// equal to G_lm = [h^{ij}_{lm}]_{ij}. A pure entry permutation.
BlockMat realign(const BlockMat& h);

/// Side::One gives sum_i H_ii (k x k); Side::Two gives [tr H_ij] (n x n).
ComplexMat partial_trace(const BlockMat& h, Side side);

/// Side::Two gives [det H_ij] (n x n); Side::One gives [det G_lm] (k x k),
/// computed as the Side::Two partial determinant of realign(h).
ComplexMat partial_det(const BlockMat& h, Side side);

/// Permutation matrix P of order nk with P^T H P = realign(H).mat() for
/// every H in M_n(M_k), and therefore P^T (A ⊗ B) P = B ⊗ A.
/// Column l*n + i holds its 1 in row i*k + l.
ComplexMat commutation_matrix(std::size_t n, std::size_t k);

/// P^T H P evaluated by index permutation rather than by products.
ComplexMat permutation_similarity(const ComplexMat& h,
                                  std::span<const std::size_t> column_rows);

inline constexpr std::size_t kDefaultTensorCap = 4096;

/// 0/1 embedding E = [⊗^r E_1, ..., ⊗^r E_n] that extracts the block
/// matrix [⊗^r H_ij] as the principal submatrix E* (⊗^r H) E.
///
/// Stored as a column -> row index list; column c has its single 1 in row
/// rows()[c] of the (nk)^r-dimensional tensor space.
class SelectionEmbedding {
 public:
  SelectionEmbedding(std::size_t n, std::size_t k, std::size_t r,
                     std::vector<std::size_t> rows);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t r() const noexcept { return r_; }

  /// (nk)^r.
  std::size_t source_dim() const noexcept { return source_dim_; }
  /// n * k^r.
  std::size_t size() const noexcept { return rows_.size(); }
  std::span<const std::size_t> rows() const noexcept { return rows_; }

  /// E* T E for a matrix T of order source_dim().
  ComplexMat extract(const ComplexMat& tensor) const;

  /// E as a real 0/1 matrix, row-major source_dim() x size().
  std::vector<double> dense() const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t r_;
  std::size_t source_dim_;
  std::vector<std::size_t> rows_;
};

/// Throws InvalidArgument for r == 0 and CapExceeded when (nk)^r > cap.
SelectionEmbedding selection_embedding(std::size_t n, std::size_t k, std::size_t r,
                                       std::size_t cap = kDefaultTensorCap);

/// [⊗^r H_ij]_{ij}: the n x n block matrix of block tensor powers.
BlockMat block_tensor_power(const BlockMat& h, std::size_t r);

}  // namespace partialmat

#endif
