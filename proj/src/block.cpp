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

#include "partialmat/block.hpp"

#include <string>

#include "partialmat/dense.hpp"
#include "partialmat/error.hpp"

namespace partialmat {

BlockMat::BlockMat(std::size_t n, std::size_t k, ComplexMat mat)
    : n_(n), k_(k), mat_(std::move(mat)) {
  if (n == 0 || k == 0) {
    throw Error(ErrorKind::InvalidArgument, "block dimensions must be positive");
  }
  if (mat_.dim() != n * k) {
    throw Error(ErrorKind::DimMismatch,
                "matrix of order " + std::to_string(mat_.dim()) +
                    " cannot be partitioned as " + std::to_string(n) + "x" +
                    std::to_string(n) + " blocks of order " + std::to_string(k));
  }
}

ComplexMat BlockMat::block(std::size_t i, std::size_t j) const {
  ComplexMat b(k_);
  for (std::size_t l = 0; l < k_; ++l)
    for (std::size_t m = 0; m < k_; ++m) b(l, m) = entry(i, j, l, m);
  return b;
}

BlockMat& BlockMat::operator+=(const BlockMat& other) {
  if (other.n_ != n_ || other.k_ != k_) {
    throw Error(ErrorKind::DimMismatch, "block matrices with different partitions");
  }
  mat_ += other.mat_;
  return *this;
}

BlockMat realign(const BlockMat& h) {
  const std::size_t n = h.n();
  const std::size_t k = h.k();
  ComplexMat out(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = 0; m < k; ++m) out(l * n + i, m * n + j) = h.entry(i, j, l, m);
  return BlockMat(k, n, std::move(out));
}

ComplexMat partial_trace(const BlockMat& h, Side side) {
  const std::size_t n = h.n();
  const std::size_t k = h.k();
  if (side == Side::One) {
    ComplexMat out(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = 0; m < k; ++m) out(l, m) += h.entry(i, i, l, m);
    return out;
  }
  ComplexMat out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex t = 0.0;
      for (std::size_t l = 0; l < k; ++l) t += h.entry(i, j, l, l);
      out(i, j) = t;
    }
  return out;
}

ComplexMat partial_det(const BlockMat& h, Side side) {
  if (side == Side::One) return partial_det(realign(h), Side::Two);
  const std::size_t n = h.n();
  ComplexMat out(n);
  auto eo = out.entries();
#pragma omp parallel for schedule(dynamic) if (n * h.k() >= kParallelMinDim)
  for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(n * n); ++idx) {
    const std::size_t u = static_cast<std::size_t>(idx);
    eo[u] = det(h.block(u / n, u % n));
  }
  return out;
}

ComplexMat commutation_matrix(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) {
    throw Error(ErrorKind::InvalidArgument, "commutation matrix dimensions must be positive");
  }
  ComplexMat p(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) p(i * k + l, l * n + i) = 1.0;
  return p;
}

ComplexMat permutation_similarity(const ComplexMat& h,
                                  std::span<const std::size_t> column_rows) {
  if (column_rows.size() != h.dim()) {
    throw Error(ErrorKind::DimMismatch, "permutation length differs from matrix order");
  }
  ComplexMat out(h.dim());
  for (std::size_t x = 0; x < h.dim(); ++x)
    for (std::size_t y = 0; y < h.dim(); ++y) out(x, y) = h(column_rows[x], column_rows[y]);
  return out;
}

SelectionEmbedding::SelectionEmbedding(std::size_t n, std::size_t k, std::size_t r,
                                       std::vector<std::size_t> rows)
    : n_(n), k_(k), r_(r), source_dim_(1), rows_(std::move(rows)) {
  for (std::size_t t = 0; t < r; ++t) source_dim_ *= n * k;
  for (std::size_t row : rows_) {
    if (row >= source_dim_) {
      throw Error(ErrorKind::InvalidArgument, "embedding row outside tensor space");
    }
  }
}

ComplexMat SelectionEmbedding::extract(const ComplexMat& tensor) const {
  if (tensor.dim() != source_dim_) {
    throw Error(ErrorKind::DimMismatch,
                "embedding expects order " + std::to_string(source_dim_) + ", got " +
                    std::to_string(tensor.dim()));
  }
  ComplexMat out(rows_.size());
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (std::size_t y = 0; y < rows_.size(); ++y) out(x, y) = tensor(rows_[x], rows_[y]);
  return out;
}

std::vector<double> SelectionEmbedding::dense() const {
  std::vector<double> e(source_dim_ * rows_.size(), 0.0);
  for (std::size_t c = 0; c < rows_.size(); ++c) e[rows_[c] * rows_.size() + c] = 1.0;
  return e;
}

SelectionEmbedding selection_embedding(std::size_t n, std::size_t k, std::size_t r,
                                       std::size_t cap) {
  if (n == 0 || k == 0) {
    throw Error(ErrorKind::InvalidArgument, "block dimensions must be positive");
  }
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "tensor order must be >= 1");
  std::size_t source = 1;
  std::size_t inner = 1;
  for (std::size_t t = 0; t < r; ++t) {
    source *= n * k;
    inner *= k;
    if (source > cap) {
      throw Error(ErrorKind::CapExceeded,
                  "tensor space exceeds dimension cap " + std::to_string(cap));
    }
  }
  std::vector<std::size_t> rows;
  rows.reserve(n * inner);
  std::vector<std::size_t> digits(r);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t flat = 0; flat < inner; ++flat) {
      // Base-k digits of flat, most significant first.
      std::size_t rest = flat;
      for (std::size_t t = r; t-- > 0;) {
        digits[t] = rest % k;
        rest /= k;
      }
      std::size_t row = 0;
      for (std::size_t t = 0; t < r; ++t) row = row * (n * k) + (j * k + digits[t]);
      rows.push_back(row);
    }
  }
  return SelectionEmbedding(n, k, r, std::move(rows));
}

BlockMat block_tensor_power(const BlockMat& h, std::size_t r) {
  const std::size_t n = h.n();
  const ComplexMat first = tensor_power(h.block(0, 0), r);
  const std::size_t kr = first.dim();
  ComplexMat out(n * kr);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMat t = (i == 0 && j == 0) ? first : tensor_power(h.block(i, j), r);
      for (std::size_t l = 0; l < kr; ++l)
        for (std::size_t m = 0; m < kr; ++m) out(i * kr + l, j * kr + m) = t(l, m);
    }
  return BlockMat(n, kr, std::move(out));
}

}  // namespace partialmat
