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

#include "partialmat/psd.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "partialmat/dense.hpp"
#include "partialmat/error.hpp"

namespace partialmat {

PsdStatus is_psd(const ComplexMat& a, const Tolerance& tol) {
  const auto eig = eig_hermitian(a, tol);
  const double scale = std::max(std::abs(eig.front()), std::abs(eig.back()));
  return {tol.nonnegative(eig.front(), scale), eig.front()};
}

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Ginibre: return "ginibre";
    case Ensemble::WishartRankR: return "wishart-rank-r";
    case Ensemble::KronStructured: return "kron-structured";
    case Ensemble::EqualityCase: return "equality-case";
    case Ensemble::DiagRandom: return "diag-random";
  }
  return "unknown";
}

std::optional<Ensemble> parse_ensemble(std::string_view name) {
  std::string norm(name);
  for (char& c : norm)
    if (c == '_') c = '-';
  for (Ensemble e : kAllEnsembles)
    if (to_string(e) == norm) return e;
  return std::nullopt;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed ^ (stream * 0x9e3779b97f4a7c15ULL);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMat ginibre_psd(std::size_t dim, std::size_t rank, Rng& rng) {
  std::vector<Complex> g(dim * rank);
  for (auto& z : g) z = rng.complex_normal();
  ComplexMat h(dim);
  const double scale = 1.0 / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Complex s = 0.0;
      for (std::size_t p = 0; p < rank; ++p) s += g[i * rank + p] * std::conj(g[j * rank + p]);
      s *= scale;
      if (i == j) {
        h(i, i) = s.real();
      } else {
        h(i, j) = s;
        h(j, i) = std::conj(s);
      }
    }
  }
  return h;
}

BlockMat generate(const GenSpec& spec) {
  if (spec.n == 0 || spec.k == 0) {
    throw Error(ErrorKind::BadSpec, "n and k must be positive");
  }
  const std::size_t d = spec.n * spec.k;
  Rng rng(spec.seed);
  switch (spec.ensemble) {
    case Ensemble::Ginibre:
      return BlockMat(spec.n, spec.k, ginibre_psd(d, d, rng));
    case Ensemble::WishartRankR: {
      const std::size_t rank = spec.rank.value_or(d > 1 ? d - 1 : 1);
      if (rank == 0 || rank > d) {
        throw Error(ErrorKind::BadSpec, "rank " + std::to_string(rank) +
                                            " outside [1, " + std::to_string(d) + "]");
      }
      return BlockMat(spec.n, spec.k, ginibre_psd(d, rank, rng));
    }
    case Ensemble::KronStructured: {
      const ComplexMat m = ginibre_psd(spec.n, spec.n, rng);
      const ComplexMat nmat = ginibre_psd(spec.k, spec.k, rng);
      return BlockMat(spec.n, spec.k, kron(m, nmat));
    }
    case Ensemble::EqualityCase: {
      const ComplexMat m = ginibre_psd(spec.n, spec.n, rng);
      return BlockMat(spec.n, spec.k, kron(m, ComplexMat::identity(spec.k)));
    }
    case Ensemble::DiagRandom: {
      std::vector<Complex> diag(d);
      for (auto& z : diag) z = rng.uniform();
      return BlockMat(spec.n, spec.k, ComplexMat::diagonal(diag));
    }
  }
  throw Error(ErrorKind::BadSpec, "unknown ensemble");
}

}  // namespace partialmat
