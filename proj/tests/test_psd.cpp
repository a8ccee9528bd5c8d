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

#include <set>

#include "doctest.h"
#include "partialmat/catalog.hpp"
#include "partialmat/dense.hpp"
#include "partialmat/error.hpp"
#include "partialmat/psd.hpp"
#include "support.hpp"

using namespace partialmat;

TEST_SUITE("psd") {

TEST_CASE("is_psd") {
  const PsdStatus id = is_psd(ComplexMat::identity(5));
  CHECK(id.psd);
  CHECK(id.margin == doctest::Approx(1.0));

  const PsdStatus bad = is_psd(ComplexMat::from_rows({{1, 2}, {2, 1}}));
  CHECK_FALSE(bad.psd);
  CHECK(bad.margin == doctest::Approx(-1.0).epsilon(1e-14));

  testing::TestRng rng(40);
  for (int t = 0; t < 10; ++t) CHECK(is_psd(rng.psd(5)).psd);

  CHECK_THROWS_AS(is_psd(ComplexMat::from_rows({{1, 2}, {0, 1}})), Error);
}

TEST_CASE("ensemble names") {
  for (Ensemble e : kAllEnsembles) CHECK(parse_ensemble(to_string(e)) == e);
  CHECK(parse_ensemble("wishart_rank_r") == Ensemble::WishartRankR);
  CHECK(parse_ensemble("equality-case") == Ensemble::EqualityCase);
  CHECK_FALSE(parse_ensemble("gue").has_value());
}

TEST_CASE("generate basic shapes") {
  const BlockMat d = generate({Ensemble::DiagRandom, 1, 1, std::nullopt, 99});
  REQUIRE(d.mat().dim() == 1);
  CHECK(d.mat()(0, 0).real() >= 0.0);
  CHECK(d.mat()(0, 0).imag() == 0.0);

  const BlockMat eq = generate({Ensemble::EqualityCase, 2, 2, std::nullopt, 5});
  // kron(M, I_2): off-diagonal entries inside each block vanish and each
  // block is a multiple of I_2.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const ComplexMat b = eq.block(i, j);
      CHECK(b(0, 1) == Complex(0.0));
      CHECK(b(1, 0) == Complex(0.0));
      CHECK(b(0, 0) == b(1, 1));
    }
  const CheckResult fm = check_fiedler_markham(eq, Side::Two);
  CHECK(std::abs(fm.margin) <= 1e-10 * std::max(1.0, std::abs(*fm.scalar_rhs)));

  const BlockMat ks = generate({Ensemble::KronStructured, 2, 3, std::nullopt, 6});
  // Rank one after realignment-style reshaping: every block is a multiple
  // of block (0,0).
  const ComplexMat b00 = ks.block(0, 0);
  const ComplexMat b01 = ks.block(0, 1);
  const Complex ratio = b01(0, 0) / b00(0, 0);
  CHECK(max_abs_diff(b01, ratio * b00) <= 1e-13);
}

TEST_CASE("generate is deterministic") {
  const GenSpec spec{Ensemble::Ginibre, 2, 2, std::nullopt, 7};
  CHECK(generate(spec) == generate(spec));

  std::set<std::vector<double>> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BlockMat h = generate({Ensemble::Ginibre, 2, 2, std::nullopt, seed});
    std::vector<double> key;
    for (const Complex& z : h.mat().entries()) key.push_back(z.real());
    seen.insert(key);
  }
  CHECK(seen.size() == 100);
}

TEST_CASE("every ensemble produces PSD matrices") {
  for (Ensemble e : kAllEnsembles) {
    for (auto [n, k] : {std::pair{1u, 1u}, {2u, 2u}, {3u, 2u}, {2u, 3u}, {2u, 4u}, {4u, 2u}}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BlockMat h = generate({e, n, k, std::nullopt, seed});
        CHECK(h.n() == n);
        CHECK(h.k() == k);
        CHECK(h.mat().hermitian_deviation() == 0.0);
        const PsdStatus s = is_psd(h.mat());
        CHECK(s.psd);
        CHECK(s.margin >= -1e-12);
      }
    }
  }
}

TEST_CASE("wishart rank controls the null space") {
  const BlockMat h = generate({Ensemble::WishartRankR, 2, 3, 2, 11});
  const auto eig = eig_hermitian(h.mat());
  std::size_t zeros = 0;
  for (double v : eig)
    if (std::abs(v) <= 1e-12) ++zeros;
  CHECK(zeros == 4);

  // Default rank nk - 1 leaves exactly one zero eigenvalue.
  const auto e2 = eig_hermitian(generate({Ensemble::WishartRankR, 2, 2, std::nullopt, 3}).mat());
  CHECK(std::abs(e2.front()) <= 1e-12);
  CHECK(e2[1] > 1e-6);
}

TEST_CASE("bad specs") {
  auto kind_of = [](const GenSpec& s) {
    try {
      generate(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of({Ensemble::WishartRankR, 2, 2, 0, 1}) == ErrorKind::BadSpec);
  CHECK(kind_of({Ensemble::WishartRankR, 2, 2, 5, 1}) == ErrorKind::BadSpec);
  CHECK(kind_of({Ensemble::Ginibre, 0, 2, std::nullopt, 1}) == ErrorKind::BadSpec);
}

TEST_CASE("Rng normal draws have unit variance") {
  Rng rng(123);
  double s = 0, s2 = 0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  CHECK(std::abs(s / count) < 0.01);
  CHECK(std::abs(s2 / count - 1.0) < 0.01);

  Rng c(5);
  double m2 = 0;
  for (int i = 0; i < count; ++i) m2 += std::norm(c.complex_normal());
  CHECK(std::abs(m2 / count - 1.0) < 0.01);

  CHECK(mix_seed(0, 1) != mix_seed(0, 2));
  CHECK(mix_seed(1, 0) != mix_seed(0, 1));
}

}  // TEST_SUITE
