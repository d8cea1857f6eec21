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

// Explicit construction of a single-layer model that reproduces a given
// truncated Fourier series exactly: equal-superposition input state, an
// on-site Pauli encoding per feature and an observable whose entries are the
// target coefficients.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fqml/fourier.hpp"
#include "fqml/simulator.hpp"
#include "fqml/spectra.hpp"

namespace fqml {

/// H_m = sum_{i=1}^m sigma_z^{(i)} / 2 on m qubits; Omega_{H_m} = {-m, ..., m}.
class UniversalHamiltonianFamily {
 public:
  static EncodingHamiltonian member(int m);
  static FrequencySpectrum spectrum(int m);
  /// Smallest m with {-K..K} contained in Omega_{H_m}.
  static int smallest_member_for_degree(int degree);
};

/// Truncated series sum_{n in Z_K^N} c_n e^{i n.x} with c_{-n} = conj(c_n).
class TargetSeries {
 public:
  /// Validates conjugate symmetry, realness of c_0 and that every frequency
  /// lies in Z_K^N. Missing partners -n are filled by conjugation.
  TargetSeries(int n_features, int degree, const FourierCoefficients& coefficients);

  int n_features() const { return n_features_; }
  int degree() const { return degree_; }
  const FourierCoefficients& coefficients() const { return coefficients_; }
  Complex at(const std::vector<int>& n) const;

  double operator()(std::span<const double> x) const;

 private:
  int n_features_;
  int degree_;
  FourierCoefficients coefficients_;
};

struct UniversalModel {
  int qubits_per_feature = 0;
  StateVector gamma;
  ComplexMatrix observable;
  /// Selected (j, k) basis-index pairs, one per frequency n with n >= 0
  /// lexicographically; lambda_j - lambda_k = n and M(j, k) = 2^{Nm} c_n.
  std::vector<std::pair<std::size_t, std::size_t>> selection;
  CircuitModel model;
};

/// Throws DimensionCap if the register would exceed the qubit cap or 2^12.
UniversalModel build_universal_model(const TargetSeries& target);

/// Max |f(x) - g(x)| over n_points uniform samples in [0, 2pi)^N.
double verify_universal(const UniversalModel& built, const TargetSeries& target,
                        int n_points, std::uint64_t seed = 0);

/// State-preparation unitary (Householder reflection) with first column gamma.
ComplexMatrix householder_to(const StateVector& gamma);

}  // namespace fqml
