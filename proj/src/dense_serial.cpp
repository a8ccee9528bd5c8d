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

// Single-threaded reference kernels.

#include <string>

#include "partialmat/dense.hpp"
#include "partialmat/error.hpp"

namespace partialmat::serial {

ComplexMat matmul(const ComplexMat& a, const ComplexMat& b) {
  const std::size_t d = a.dim();
  if (b.dim() != d) throw Error(ErrorKind::DimMismatch, "matmul of different orders");
  ComplexMat c(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t j = 0; j < d; ++j) c(i, j) += a(i, p) * b(p, j);
  return c;
}

ComplexMat kron(const ComplexMat& a, const ComplexMat& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMat c(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t l = 0; l < db; ++l)
        for (std::size_t m = 0; m < db; ++m) c(i * db + l, j * db + m) = a(i, j) * b(l, m);
  return c;
}

ComplexMat tensor_power(const ComplexMat& a, std::size_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "tensor power order must be >= 1");
  ComplexMat out = a;
  for (std::size_t i = 1; i < r; ++i) out = serial::kron(out, a);
  return out;
}

ComplexMat compound(const ComplexMat& a, std::size_t r) {
  if (r == 0 || r > a.dim()) {
    throw Error(ErrorKind::InvalidArgument, "compound order " + std::to_string(r) +
                                                " outside [1, dim]");
  }
  const auto subsets = lex_subsets(a.dim(), r);
  ComplexMat c(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s)
    for (std::size_t t = 0; t < subsets.size(); ++t)
      c(s, t) = det(submatrix(a, subsets[s].members(), subsets[t].members()));
  return c;
}

}  // namespace partialmat::serial
