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

#ifndef PARTIALMAT_COMPLEX_MAT_HPP
#define PARTIALMAT_COMPLEX_MAT_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace partialmat {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major.
///
/// Equality is entrywise and exact; use max_abs_diff() for tolerant
/// comparisons. A default-constructed matrix has dim 0 and is only useful
/// as a placeholder.
class ComplexMat {
 public:
  ComplexMat() = default;

  /// Zero matrix of the given order. Throws InvalidArgument for dim 0.
  explicit ComplexMat(std::size_t dim);

  /// Takes ownership of row-major entries; entries.size() must be dim².
  ComplexMat(std::size_t dim, std::vector<Complex> entries);

  static ComplexMat identity(std::size_t dim);
  static ComplexMat diagonal(std::span<const Complex> diag);
  static ComplexMat from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMat transpose() const;
  ComplexMat adjoint() const;
  Complex trace() const;

  /// Largest entry modulus (0 for the empty matrix).
  double max_abs() const;
  double frobenius_norm() const;

  /// max |a_ij - conj(a_ji)|.
  double hermitian_deviation() const;

  /// (A + A*) / 2.
  ComplexMat hermitian_part() const;

  ComplexMat& operator+=(const ComplexMat& other);
  ComplexMat& operator-=(const ComplexMat& other);
  ComplexMat& operator*=(Complex scalar);

  friend ComplexMat operator+(ComplexMat lhs, const ComplexMat& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMat operator-(ComplexMat lhs, const ComplexMat& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMat operator*(Complex scalar, ComplexMat m) {
    m *= scalar;
    return m;
  }

  bool operator==(const ComplexMat& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b. Throws DimMismatch.
double max_abs_diff(const ComplexMat& a, const ComplexMat& b);

/// Strictly increasing 0-based member list of an r-subset of {0..dim-1}.
class SubsetIndex {
 public:
  explicit SubsetIndex(std::vector<std::size_t> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::span<const std::size_t> members() const noexcept { return members_; }
  std::size_t operator[](std::size_t i) const { return members_[i]; }

  bool operator==(const SubsetIndex&) const = default;

 private:
  std::vector<std::size_t> members_;
};

/// All r-subsets of {0..dim-1} in lexicographic order.
std::vector<SubsetIndex> lex_subsets(std::size_t dim, std::size_t r);

std::size_t binomial(std::size_t n, std::size_t r);

}  // namespace partialmat

#endif
