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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "fqml/simulator.hpp"
#include "fqml/universal.hpp"

namespace fqml {

struct Dataset {
  std::vector<std::vector<double>> inputs;
  std::vector<double> labels;

  std::size_t size() const { return labels.size(); }
};

/// `points` equidistant samples x_t = 2 pi t / points of a univariate target.
Dataset equidistant_dataset(const std::function<double(double)>& target, int points = 25);

/// Same grid per feature (points^N samples in total).
Dataset equidistant_dataset(const TargetSeries& target, int points = 25);

enum class GradientMethod { parameter_shift, central_difference };

struct TrainConfig {
  double learning_rate = 0.3;
  int max_steps = 200;
  int batch_size = 25;
  std::uint64_t seed = 0;
  int restarts = 3;
  GradientMethod gradient = GradientMethod::parameter_shift;
};

struct AdamConstants {
  static constexpr double beta1 = 0.9;
  static constexpr double beta2 = 0.999;
  static constexpr double epsilon = 1e-8;
};

struct TrainState {
  std::vector<double> params;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  int step = 0;
  /// (step, full-dataset MSE), step 0 is the initial point.
  std::vector<std::pair<int, double>> loss_history;

  explicit TrainState(std::vector<double> initial = {});
};

double mse_loss(const CircuitModel& model, std::span<const double> params, const Dataset& data);

/// Gradient of the MSE on `data`. Pauli-rotation parameters use the two-term
/// shift rule under the parameter_shift method; generic ones (or the
/// central_difference method) use central differences with h = 1e-5.
std::vector<double> gradient(const CircuitModel& model, std::span<const double> params,
                             const Dataset& data,
                             GradientMethod method = GradientMethod::parameter_shift);

/// Bias-corrected Adam step.
TrainState adam_step(TrainState state, std::span<const double> grad, const TrainConfig& config);

struct FitReport {
  double initial_mse = 0.0;
  double final_mse = 0.0;
  int best_restart = 0;
  std::vector<double> restart_final_mse;
};

struct FitResult {
  TrainState best;
  FitReport report;
};

/// Runs config.restarts independent runs; run r draws its initial
/// parameters uniformly from [0, 2pi) with seed config.seed + r.
FitResult fit(const CircuitModel& model, const Dataset& data, const TrainConfig& config);
FitResult fit(const CircuitModel& model, const TargetSeries& target, const TrainConfig& config,
              int points = 25);

/// step,mse rows.
void write_loss_csv(std::ostream& out, const TrainState& state);

}  // namespace fqml
