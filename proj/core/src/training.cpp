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

#include "fqml/training.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <locale>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "fqml/errors.hpp"

namespace fqml {

Dataset equidistant_dataset(const std::function<double(double)>& target, int points) {
  if (points < 1) throw EmptyDataset("dataset needs at least one point");
  Dataset data;
  for (int t = 0; t < points; ++t) {
    const double x = 2.0 * std::numbers::pi * t / points;
    data.inputs.push_back({x});
    data.labels.push_back(target(x));
  }
  return data;
}

Dataset equidistant_dataset(const TargetSeries& target, int points) {
  if (points < 1) throw EmptyDataset("dataset needs at least one point");
  const int n = target.n_features();
  std::size_t total = 1;
  for (int f = 0; f < n; ++f) total *= static_cast<std::size_t>(points);
  Dataset data;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<double> x(static_cast<std::size_t>(n));
    std::size_t rest = idx;
    for (int f = 0; f < n; ++f) {
      x[f] = 2.0 * std::numbers::pi * static_cast<double>(rest % points) / points;
      rest /= points;
    }
    data.labels.push_back(target(x));
    data.inputs.push_back(std::move(x));
  }
  return data;
}

TrainState::TrainState(std::vector<double> initial)
    : params(std::move(initial)),
      first_moment(params.size(), 0.0),
      second_moment(params.size(), 0.0) {}

namespace {

void check_dataset(const Dataset& data) {
  if (data.labels.empty()) throw EmptyDataset("dataset is empty");
  if (data.inputs.size() != data.labels.size()) {
    throw DimensionMismatch("dataset inputs and labels differ in length");
  }
}

Dataset subset(const Dataset& data, std::span<const std::size_t> indices) {
  Dataset out;
  for (std::size_t i : indices) {
    out.inputs.push_back(data.inputs[i]);
    out.labels.push_back(data.labels[i]);
  }
  return out;
}

}  // namespace

double mse_loss(const CircuitModel& model, std::span<const double> params, const Dataset& data) {
  check_dataset(data);
  const std::vector<double> values = evaluate_batch(model, params, data.inputs);
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double r = values[i] - data.labels[i];
    sum += r * r;
  }
  return sum / static_cast<double>(data.size());
}

std::vector<double> gradient(const CircuitModel& model, std::span<const double> params,
                             const Dataset& data, GradientMethod method) {
  check_dataset(data);
  const auto n_params = static_cast<std::size_t>(model.parameter_count());
  if (params.size() != n_params) {
    throw ParamCountMismatch("model expects " + std::to_string(n_params) +
                             " parameters, got " + std::to_string(params.size()));
  }
  const auto& generators = model.parameter_generators();
  for (GeneratorType g : generators) {
    if (g == GeneratorType::unspecified) {
      throw UnknownGeneratorType("parameter has no generator tag");
    }
  }

  std::vector<double> residuals = evaluate_batch(model, params, data.inputs);
  for (std::size_t i = 0; i < data.size(); ++i) residuals[i] -= data.labels[i];

  constexpr double kFiniteDifferenceStep = 1e-5;
  std::vector<double> shifted(params.begin(), params.end());
  std::vector<double> grad(n_params, 0.0);
  for (std::size_t k = 0; k < n_params; ++k) {
    const bool use_shift =
        method == GradientMethod::parameter_shift && generators[k] == GeneratorType::pauli_rotation;
    const double h = use_shift ? std::numbers::pi / 2.0 : kFiniteDifferenceStep;
    const double denom = use_shift ? 2.0 : 2.0 * kFiniteDifferenceStep;
    shifted[k] = params[k] + h;
    const std::vector<double> plus = evaluate_batch(model, shifted, data.inputs);
    shifted[k] = params[k] - h;
    const std::vector<double> minus = evaluate_batch(model, shifted, data.inputs);
    double acc = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      acc += residuals[i] * (plus[i] - minus[i]) / denom;
    }
    shifted[k] = params[k];
    grad[k] = 2.0 * acc / static_cast<double>(data.size());
  }
  return grad;
}

TrainState adam_step(TrainState state, std::span<const double> grad, const TrainConfig& config) {
  if (grad.size() != state.params.size() || state.first_moment.size() != state.params.size() ||
      state.second_moment.size() != state.params.size()) {
    throw DimensionMismatch("gradient and state sizes differ");
  }
  using A = AdamConstants;
  state.step += 1;
  const double c1 = 1.0 - std::pow(A::beta1, state.step);
  const double c2 = 1.0 - std::pow(A::beta2, state.step);
  for (std::size_t k = 0; k < grad.size(); ++k) {
    state.first_moment[k] = A::beta1 * state.first_moment[k] + (1.0 - A::beta1) * grad[k];
    state.second_moment[k] =
        A::beta2 * state.second_moment[k] + (1.0 - A::beta2) * grad[k] * grad[k];
    const double m_hat = state.first_moment[k] / c1;
    const double v_hat = state.second_moment[k] / c2;
    state.params[k] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + A::epsilon);
  }
  return state;
}

namespace {

TrainState run_single(const CircuitModel& model, const Dataset& data, const TrainConfig& config,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> init(static_cast<std::size_t>(model.parameter_count()));
  for (double& p : init) p = angle(rng);

  TrainState state(std::move(init));
  state.loss_history.emplace_back(0, mse_loss(model, state.params, data));

  const bool full_batch = static_cast<std::size_t>(config.batch_size) >= data.size();
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  for (int s = 0; s < config.max_steps; ++s) {
    std::vector<double> grad;
    if (full_batch) {
      grad = gradient(model, state.params, data, config.gradient);
    } else {
      std::shuffle(order.begin(), order.end(), rng);
      const auto batch = subset(
          data, std::span<const std::size_t>(order).first(static_cast<std::size_t>(config.batch_size)));
      grad = gradient(model, state.params, batch, config.gradient);
    }
    state = adam_step(std::move(state), grad, config);
    state.loss_history.emplace_back(state.step, mse_loss(model, state.params, data));
  }
  return state;
}

}  // namespace

FitResult fit(const CircuitModel& model, const Dataset& data, const TrainConfig& config) {
  check_dataset(data);
  if (!(config.learning_rate > 0.0)) throw InvalidArgument("learning rate must be positive");
  if (config.max_steps < 1) throw InvalidArgument("max steps must be >= 1");
  if (config.restarts < 1) throw InvalidArgument("restarts must be >= 1");
  if (config.batch_size < 1 || static_cast<std::size_t>(config.batch_size) > data.size()) {
    throw InvalidArgument("batch size must be in [1, dataset size]");
  }
  if (model.parameter_count() == 0) throw InvalidArgument("model has no trainable parameters");

  // Restarts are independent; results are gathered in restart order.
  std::vector<std::future<TrainState>> runs;
  for (int r = 0; r < config.restarts; ++r) {
    runs.push_back(std::async(std::launch::async, run_single, std::cref(model), std::cref(data),
                              std::cref(config), config.seed + static_cast<std::uint64_t>(r)));
  }
  std::vector<TrainState> states;
  for (auto& f : runs) states.push_back(f.get());

  FitReport report;
  std::size_t best = 0;
  for (std::size_t r = 0; r < states.size(); ++r) {
    report.restart_final_mse.push_back(states[r].loss_history.back().second);
    if (report.restart_final_mse[r] < report.restart_final_mse[best]) best = r;
  }
  report.best_restart = static_cast<int>(best);
  report.initial_mse = states[best].loss_history.front().second;
  report.final_mse = states[best].loss_history.back().second;
  return {std::move(states[best]), std::move(report)};
}

FitResult fit(const CircuitModel& model, const TargetSeries& target, const TrainConfig& config,
              int points) {
  if (target.n_features() != model.n_features()) {
    throw DimensionMismatch("target and model feature counts differ");
  }
  return fit(model, equidistant_dataset(target, points), config);
}

void write_loss_csv(std::ostream& out, const TrainState& state) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf.precision(17);
  buf << "step,mse\n";
  for (const auto& [step, mse] : state.loss_history) buf << step << ',' << mse << '\n';
  out << buf.str();
}

}  // namespace fqml
