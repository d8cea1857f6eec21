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

// Coefficient distributions of randomly initialised single-layer models with
// r parallel Pauli-X encodings.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "fqml/fourier.hpp"
#include "fqml/simulator.hpp"

namespace fqml {

struct SamplingConfig {
  Ansatz ansatz;
  /// Number of qubits, each carrying one parallel encoding gate.
  int repetitions = 1;
  int n_samples = 100;
  std::uint64_t seed = 0;
  /// Report c_0 .. c_{n_reported - 1}.
  int n_reported = 6;
};

struct CoefficientSample {
  AnsatzKind ansatz = AnsatzKind::A;
  int sublayers = 1;
  int n_qubits = 1;
  std::uint64_t seed = 0;
  FourierCoefficients coefficients;
};

/// W(theta2) RX^{(x) r}(x) W(theta1) with sigma_z measured on qubit 0.
CircuitModel parallel_encoding_model(const Ansatz& ansatz, int repetitions);

/// Parameters for sample `index`; the default draws uniform [0, 2pi) angles
/// from a stream seeded with seed + index.
using ParameterSource = std::function<std::vector<double>(std::size_t index, int count)>;

std::vector<CoefficientSample> sample_coefficients(const SamplingConfig& config);
std::vector<CoefficientSample> sample_coefficients(const SamplingConfig& config,
                                                   const ParameterSource& source);

struct FrequencyStats {
  int frequency = 0;
  Complex mean;
  double variance_re = 0.0;
  double variance_im = 0.0;
  double max_abs = 0.0;
  bool structural_zero = false;
};

inline constexpr double kStructuralZero = 1e-10;

/// Per-frequency statistics for n = 0 .. n_reported - 1 (population variance).
std::vector<FrequencyStats> coefficient_stats(const std::vector<CoefficientSample>& samples,
                                              int n_reported = 6);

/// sample_index,freq,re,im for n = 0 .. n_reported - 1.
void write_samples_csv(std::ostream& out, const std::vector<CoefficientSample>& samples,
                       int n_reported = 6);

/// freq,mean_re,mean_im,var_re,var_im,max_abs,structural_zero
void write_stats_csv(std::ostream& out, const std::vector<FrequencyStats>& stats);

}  // namespace fqml
