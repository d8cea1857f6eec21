// Copyright 2026 The fqml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "fqml/fourier.hpp"
#include "fqml/sampling.hpp"
#include "fqml/simulator.hpp"
#include "fqml/training.hpp"

namespace {

std::vector<double> random_angles(int count) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (double& v : out) v = angle(rng);
  return out;
}

// Arg: number of encoding repetitions (= qubits).
void BM_Evaluate(benchmark::State& state) {
  const auto model = fqml::parallel_encoding_model({3, fqml::AnsatzKind::A},
                                                   static_cast<int>(state.range(0)));
  const auto params = random_angles(model.parameter_count());
  const std::vector<double> x{0.7};
  for (auto _ : state) benchmark::DoNotOptimize(fqml::evaluate(model, params, x));
}
BENCHMARK(BM_Evaluate)->DenseRange(1, 9, 2);

void BM_CoefficientsExact(benchmark::State& state) {
  const auto model = fqml::parallel_encoding_model({3, fqml::AnsatzKind::A},
                                                   static_cast<int>(state.range(0)));
  const auto params = random_angles(model.parameter_count());
  for (auto _ : state) benchmark::DoNotOptimize(fqml::coefficients_exact(model, params));
}
BENCHMARK(BM_CoefficientsExact)->DenseRange(1, 5, 2);

void BM_CoefficientsDft(benchmark::State& state) {
  const auto model = fqml::parallel_encoding_model({3, fqml::AnsatzKind::A},
                                                   static_cast<int>(state.range(0)));
  const auto params = random_angles(model.parameter_count());
  for (auto _ : state) benchmark::DoNotOptimize(fqml::coefficients_dft(model, params));
}
BENCHMARK(BM_CoefficientsDft)->DenseRange(1, 9, 2);

void BM_Gradient(benchmark::State& state) {
  const auto model = fqml::parallel_encoding_model({3, fqml::AnsatzKind::A}, 3);
  const auto params = random_angles(model.parameter_count());
  const fqml::Dataset data =
      fqml::equidistant_dataset([](double x) { return 0.1 * std::cos(x); }, 25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fqml::gradient(model, params, data, fqml::GradientMethod::parameter_shift));
  }
}
BENCHMARK(BM_Gradient)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
