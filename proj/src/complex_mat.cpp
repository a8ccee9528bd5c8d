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

#include "partialmat/complex_mat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "partialmat/error.hpp"

namespace partialmat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::DimTooLarge: return "DimTooLarge";
  }
  return "Unknown";
}

ComplexMat::ComplexMat(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) {
    throw Error(ErrorKind::InvalidArgument, "matrix order must be positive");
  }
}

ComplexMat::ComplexMat(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) {
    throw Error(ErrorKind::InvalidArgument, "matrix order must be positive");
  }
  if (entries_.size() != dim * dim) {
    throw Error(ErrorKind::DimMismatch,
                "expected " + std::to_string(dim * dim) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

ComplexMat ComplexMat::identity(std::size_t dim) {
  ComplexMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMat ComplexMat::diagonal(std::span<const Complex> diag) {
  ComplexMat m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMat ComplexMat::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t dim = rows.size();
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw Error(ErrorKind::DimMismatch, "from_rows: matrix must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMat(dim, std::move(entries));
}

ComplexMat ComplexMat::transpose() const {
  ComplexMat t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ComplexMat ComplexMat::adjoint() const {
  ComplexMat t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

Complex ComplexMat::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMat::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMat::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMat::hermitian_deviation() const {
  double dev = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return dev;
}

ComplexMat ComplexMat::hermitian_part() const {
  ComplexMat h(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      h(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return h;
}

ComplexMat& ComplexMat::operator+=(const ComplexMat& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorKind::DimMismatch, "matrix sum of different orders");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMat& ComplexMat::operator-=(const ComplexMat& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorKind::DimMismatch, "matrix difference of different orders");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMat& ComplexMat::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

double max_abs_diff(const ComplexMat& a, const ComplexMat& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch, "max_abs_diff of different orders");
  }
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

SubsetIndex::SubsetIndex(std::vector<std::size_t> members)
    : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i] <= members_[i - 1]) {
      throw Error(ErrorKind::InvalidArgument,
                  "subset members must be strictly increasing");
    }
  }
}

std::vector<SubsetIndex> lex_subsets(std::size_t dim, std::size_t r) {
  std::vector<SubsetIndex> out;
  if (r == 0 || r > dim) return out;
  out.reserve(binomial(dim, r));
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.emplace_back(cur);
    // Advance the rightmost member that still has room.
    std::size_t pos = r;
    while (pos > 0 && cur[pos - 1] == dim - r + (pos - 1)) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t i = pos; i < r; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::size_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace partialmat
