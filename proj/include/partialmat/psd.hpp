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

#ifndef PARTIALMAT_PSD_HPP
#define PARTIALMAT_PSD_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "partialmat/block.hpp"
#include "partialmat/complex_mat.hpp"
#include "partialmat/tolerance.hpp"

namespace partialmat {

struct PsdStatus {
  bool psd;
  double margin;  // lambda_min
};

/// Throws NotHermitian when a is not Hermitian within tol.
PsdStatus is_psd(const ComplexMat& a, const Tolerance& tol = {});

enum class Ensemble { Ginibre, WishartRankR, KronStructured, EqualityCase, DiagRandom };

inline constexpr Ensemble kAllEnsembles[] = {
    Ensemble::Ginibre, Ensemble::WishartRankR, Ensemble::KronStructured,
    Ensemble::EqualityCase, Ensemble::DiagRandom};

/// Kebab-case name, e.g. "wishart-rank-r".
std::string_view to_string(Ensemble e);

/// Accepts kebab-case or snake_case names.
std::optional<Ensemble> parse_ensemble(std::string_view name);

struct GenSpec {
  Ensemble ensemble = Ensemble::Ginibre;
  std::size_t n = 1;
  std::size_t k = 1;
  /// Column count of the Wishart factor; defaults to nk - 1 (at least 1).
  std::optional<std::size_t> rank;
  std::uint64_t seed = 0;
};

/// Deterministic PSD block matrix. Throws BadSpec on zero dimensions or a
/// rank outside [1, nk].
///
///   ginibre         G G* / (nk), G square with i.i.d. standard complex normals
///   wishart-rank-r  same with G of shape nk x rank
///   kron-structured M ⊗ N with M, N normalized Ginibre PSD of orders n, k
///   equality-case   M ⊗ I_k
///   diag-random     diagonal, i.i.d. uniform [0, 1)
BlockMat generate(const GenSpec& spec);

/// mt19937_64 with hand-rolled uniform and Box-Muller normal draws, so the
/// stream depends only on the standard engine definition.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double normal();
  /// Real and imaginary parts N(0, 1/2), so E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// G G* / dim with G of shape dim x rank, i.i.d. standard complex normals.
ComplexMat ginibre_psd(std::size_t dim, std::size_t rank, Rng& rng);

/// splitmix64 finalizer applied to seed ^ stream; used to give each trial
/// and each operand an independent, reproducible seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace partialmat

#endif
