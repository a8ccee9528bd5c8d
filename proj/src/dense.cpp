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

#include "partialmat/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "partialmat/error.hpp"

namespace partialmat {

ComplexMat matmul(const ComplexMat& a, const ComplexMat& b) {
  const std::size_t d = a.dim();
  if (b.dim() != d) throw Error(ErrorKind::DimMismatch, "matmul of different orders");
  ComplexMat c(d);
  const auto ea = a.entries();
  const auto eb = b.entries();
  auto ec = c.entries();
  // Same i-p-j accumulation order as serial::matmul, so results match bitwise.
#pragma omp parallel for schedule(static) if (d >= kParallelMinDim)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(d); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    for (std::size_t p = 0; p < d; ++p) {
      const Complex aip = ea[i * d + p];
      for (std::size_t j = 0; j < d; ++j) ec[i * d + j] += aip * eb[p * d + j];
    }
  }
  return c;
}

ComplexMat kron(const ComplexMat& a, const ComplexMat& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t d = da * db;
  ComplexMat c(d);
  auto ec = c.entries();
#pragma omp parallel for schedule(static) if (d >= kParallelMinDim)
  for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(d); ++rr) {
    const std::size_t row = static_cast<std::size_t>(rr);
    const std::size_t i = row / db;
    const std::size_t l = row % db;
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t m = 0; m < db; ++m) ec[row * d + j * db + m] = aij * b(l, m);
    }
  }
  return c;
}

ComplexMat tensor_power(const ComplexMat& a, std::size_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "tensor power order must be >= 1");
  ComplexMat out = a;
  for (std::size_t i = 1; i < r; ++i) out = kron(out, a);
  return out;
}

ComplexMat submatrix(const ComplexMat& a, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw Error(ErrorKind::InvalidArgument, "submatrix must be square and nonempty");
  }
  ComplexMat s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return s;
}

ComplexMat compound(const ComplexMat& a, std::size_t r) {
  if (r == 0 || r > a.dim()) {
    throw Error(ErrorKind::InvalidArgument,
                "compound order " + std::to_string(r) + " outside [1, " +
                    std::to_string(a.dim()) + "]");
  }
  const auto subsets = lex_subsets(a.dim(), r);
  const std::size_t m = subsets.size();
  ComplexMat c(m);
  auto ec = c.entries();
#pragma omp parallel for schedule(dynamic) if (m >= kParallelMinDim)
  for (std::ptrdiff_t ss = 0; ss < static_cast<std::ptrdiff_t>(m); ++ss) {
    const std::size_t s = static_cast<std::size_t>(ss);
    for (std::size_t t = 0; t < m; ++t)
      ec[s * m + t] = det(submatrix(a, subsets[s].members(), subsets[t].members()));
  }
  return c;
}

Complex det(const ComplexMat& a) {
  const std::size_t d = a.dim();
  std::vector<Complex> lu(a.entries().begin(), a.entries().end());
  Complex result = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu[k * d + k]);
    for (std::size_t i = k + 1; i < d; ++i) {
      const double v = std::abs(lu[i * d + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      std::swap_ranges(lu.begin() + static_cast<std::ptrdiff_t>(k * d),
                       lu.begin() + static_cast<std::ptrdiff_t>((k + 1) * d),
                       lu.begin() + static_cast<std::ptrdiff_t>(piv * d));
      result = -result;
    }
    const Complex pivot = lu[k * d + k];
    result *= pivot;
    for (std::size_t i = k + 1; i < d; ++i) {
      const Complex f = lu[i * d + k] / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < d; ++j) lu[i * d + j] -= f * lu[k * d + j];
    }
  }
  return result;
}

double hermitian_det(const ComplexMat& a, const Tolerance& tol) {
  const Complex d = det(a);
  if (std::abs(d.imag()) > tol.bound(std::abs(d.real()))) {
    throw Error(ErrorKind::NotHermitian,
                "determinant has imaginary part " + std::to_string(d.imag()));
  }
  return d.real();
}

namespace {

void require_hermitian(const ComplexMat& a, const Tolerance& tol) {
  const double dev = a.hermitian_deviation();
  if (!(dev <= tol.bound(a.max_abs()))) {
    throw Error(ErrorKind::NotHermitian,
                "hermitian deviation " + std::to_string(dev) + " exceeds tolerance");
  }
}

double off_diagonal_norm(const ComplexMat& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      if (i != j) s += std::norm(w(i, j));
  return std::sqrt(s);
}

}  // namespace

std::vector<double> eig_hermitian(const ComplexMat& a, const Tolerance& tol) {
  require_hermitian(a, tol);
  const std::size_t n = a.dim();
  ComplexMat w = a.hermitian_part();
  for (std::size_t i = 0; i < n; ++i) w(i, i) = w(i, i).real();

  const double target = 1e-14 * w.frobenius_norm();
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(w) <= target) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = w(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = w(p, p).real();
        const double aqq = w(q, q).real();
        const double g = 100.0 * mag;
        if (sweep > 3 && std::abs(app) + g == std::abs(app) &&
            std::abs(aqq) + g == std::abs(aqq)) {
          w(p, q) = 0.0;
          w(q, p) = 0.0;
          continue;
        }
        // Phase e^{-i arg apq} on column q makes the pivot real; then a real
        // rotation annihilates it.
        const Complex phase = std::conj(apq) / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = w(r, p);
          const Complex arq = phase * w(r, q);
          const Complex np = c * arp - s * arq;
          const Complex nq = s * arp + c * arq;
          w(r, p) = np;
          w(p, r) = std::conj(np);
          w(r, q) = nq;
          w(q, r) = std::conj(nq);
        }
        w(p, p) = app - t * mag;
        w(q, q) = aqq + t * mag;
        w(p, q) = 0.0;
        w(q, p) = 0.0;
      }
    }
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                "Jacobi sweep cap reached at order " + std::to_string(n));
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = w(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double lambda_min(const ComplexMat& a, const Tolerance& tol) {
  return eig_hermitian(a, tol).front();
}

double loewner_margin(const ComplexMat& a, const ComplexMat& b, const Tolerance& tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch, "loewner_margin of different orders");
  }
  require_hermitian(a, tol);
  require_hermitian(b, tol);
  return lambda_min((a - b).hermitian_part(), tol);
}

}  // namespace partialmat
