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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "partialmat/dense.hpp"
#include "partialmat/psd.hpp"
#include "partialmat/suite.hpp"

namespace pm = partialmat;

namespace {

pm::ComplexMat random_matrix(std::size_t d, std::uint64_t seed) {
  pm::Rng rng(seed);
  pm::ComplexMat m(d);
  for (auto& z : m.entries()) z = rng.complex_normal();
  return m;
}

void BM_matmul_serial(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(d, 1), b = random_matrix(d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pm::serial::matmul(a, b));
}

void BM_matmul_parallel(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(d, 1), b = random_matrix(d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pm::matmul(a, b));
}

void BM_kron_serial(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(d, 3), b = random_matrix(d, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pm::serial::kron(a, b));
}

void BM_kron_parallel(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(d, 3), b = random_matrix(d, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pm::kron(a, b));
}

void BM_tensor_power_serial(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(pm::serial::tensor_power(a, 3));
}

void BM_tensor_power_parallel(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(pm::tensor_power(a, 3));
}

void BM_compound_serial(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(pm::serial::compound(a, 3));
}

void BM_compound_parallel(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(pm::compound(a, 3));
}

std::vector<pm::GenSpec> suite_specs() {
  std::vector<pm::GenSpec> specs;
  for (pm::Ensemble e : pm::kAllEnsembles) specs.push_back({e, 2, 3, std::nullopt, 42});
  return specs;
}

void BM_suite_serial(benchmark::State& state) {
  const auto specs = suite_specs();
  for (auto _ : state) benchmark::DoNotOptimize(pm::run_suite_serial(specs, 20));
}

void BM_suite_parallel(benchmark::State& state) {
  const auto specs = suite_specs();
  for (auto _ : state) benchmark::DoNotOptimize(pm::run_suite(specs, 20));
}

}  // namespace

BENCHMARK(BM_matmul_serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matmul_parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_kron_serial)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_kron_parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_tensor_power_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_tensor_power_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_compound_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_compound_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_suite_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
