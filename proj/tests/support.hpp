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

#ifndef PARTIALMAT_TESTS_SUPPORT_HPP
#define PARTIALMAT_TESTS_SUPPORT_HPP

// Random inputs for tests, drawn independently of the library generators.

#include <algorithm>
#include <cmath>
#include <random>

#include "partialmat/block.hpp"
#include "partialmat/complex_mat.hpp"

namespace partialmat::testing {

class TestRng {
 public:
  explicit TestRng(unsigned long long seed) : eng_(seed) {}

  double normal() { return normal_(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  ComplexMat matrix(std::size_t d) {
    ComplexMat m(d);
    for (auto& z : m.entries()) z = Complex(normal(), normal());
    return m;
  }

  /// Gaussian-integer entries in [-3, 3] + i[-3, 3]; products stay exact.
  ComplexMat integer_matrix(std::size_t d) {
    ComplexMat m(d);
    for (auto& z : m.entries()) z = Complex(integer(-3, 3), integer(-3, 3));
    return m;
  }

  ComplexMat hermitian(std::size_t d) {
    ComplexMat m = matrix(d);
    return m.hermitian_part();
  }

  /// G G* / d + shift * I, exactly Hermitian.
  ComplexMat psd(std::size_t d, double shift = 0.0) {
    const ComplexMat g = matrix(d);
    ComplexMat h(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Complex s = 0.0;
        for (std::size_t p = 0; p < d; ++p) s += g(i, p) * std::conj(g(j, p));
        s /= static_cast<double>(d);
        if (i == j) {
          h(i, i) = s.real() + shift;
        } else {
          h(i, j) = s;
          h(j, i) = std::conj(s);
        }
      }
    return h;
  }

  BlockMat block(std::size_t n, std::size_t k) { return BlockMat(n, k, matrix(n * k)); }
  BlockMat psd_block(std::size_t n, std::size_t k) { return BlockMat(n, k, psd(n * k)); }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// M = [[2,1],[1,2]], the matrix used by the hand-evaluated examples.
inline ComplexMat m2() { return ComplexMat::from_rows({{2, 1}, {1, 2}}); }

}  // namespace partialmat::testing

#endif
