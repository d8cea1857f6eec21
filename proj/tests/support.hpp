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

// Shared fixtures and brute-force oracles for the test binaries. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fqml/fourier.hpp"
#include "fqml/linalg.hpp"
#include "fqml/simulator.hpp"
#include "fqml/spectra.hpp"

namespace fqml::testing {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

inline ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(normal(rng), normal(rng));
  }
  return (a + a.adjoint()) / 2.0;
}

inline std::vector<double> random_params(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (double& v : out) v = angle(rng);
  return out;
}

inline ComplexMatrix pauli_z_on(int qubit, int n_qubits) {
  const auto dim = std::size_t{1} << n_qubits;
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = ((i >> qubit) & 1U) ? -1.0 : 1.0;
  }
  return m;
}

/// Single qubit, identity trainable blocks, one Pauli encoding, sigma_z.
inline CircuitModel single_rotation_model(PauliAxis axis) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return CircuitModel(1, 1, {Layer{FixedUnitary{id}, PauliRotationEncoding{axis, 0, 0}}},
                      FixedUnitary{id}, pauli_matrix(PauliAxis::Z));
}

/// Single qubit Rot blocks around an RX encoding, repeated `layers` times.
inline CircuitModel rx_reuploading_model(int layers) {
  std::vector<Layer> stack;
  for (int l = 0; l < layers; ++l) {
    stack.push_back(Layer{Ansatz{1, AnsatzKind::A}, PauliRotationEncoding{PauliAxis::X, 0, 0}});
  }
  return CircuitModel(1, 1, std::move(stack), Ansatz{1, AnsatzKind::A},
                      pauli_matrix(PauliAxis::Z));
}

/// A model with a diagonal integer-eigenvalue encoding of dimension
/// d = 2^block_qubits per layer, dense random trainable blocks and a random
/// Hermitian observable.
struct RandomDiagonalModel {
  CircuitModel model;
  EncodingHamiltonian hamiltonian;
};

inline RandomDiagonalModel random_diagonal_model(int block_qubits, int layers, int extra_qubits,
                                                 std::mt19937_64& rng) {
  const int n = block_qubits + extra_qubits;
  const int dim = 1 << n;
  std::uniform_int_distribution<int> eig(-2, 2);
  std::vector<double> lambda(std::size_t{1} << block_qubits);
  for (double& v : lambda) v = eig(rng);
  std::vector<int> qubits(static_cast<std::size_t>(block_qubits));
  for (int q = 0; q < block_qubits; ++q) qubits[q] = q;
  EncodingHamiltonian h(lambda);
  std::vector<Layer> stack;
  for (int l = 0; l < layers; ++l) {
    stack.push_back(Layer{FixedUnitary{random_unitary(dim, rng)},
                          DiagonalEncoding{{DiagonalBlock{0, qubits, h}}}});
  }
  CircuitModel model(n, 1, std::move(stack), FixedUnitary{random_unitary(dim, rng)},
                     random_hermitian(dim, rng));
  return {std::move(model), std::move(h)};
}

/// Every Lambda_k - Lambda_j over all d^{2L} index tuples, snapped and sorted.
inline std::vector<double> brute_force_differences(const std::vector<double>& eigenvalues,
                                                   int layers) {
  const std::size_t d = eigenvalues.size();
  std::size_t paths = 1;
  for (int l = 0; l < layers; ++l) paths *= d;
  std::vector<double> sums(paths);
  for (std::size_t p = 0; p < paths; ++p) {
    double s = 0.0;
    std::size_t rest = p;
    for (int l = 0; l < layers; ++l) {
      s += eigenvalues[rest % d];
      rest /= d;
    }
    sums[p] = s;
  }
  std::vector<double> out;
  for (std::size_t k = 0; k < paths; ++k) {
    for (std::size_t j = 0; j < paths; ++j) {
      const double w = sums[k] - sums[j];
      const bool seen = std::any_of(out.begin(), out.end(), [&](double v) {
        return std::abs(v - w) <= 1e-9 * std::max({1.0, std::abs(v), std::abs(w)});
      });
      if (!seen) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Matrix element-wise embedding of `gate` on `targets`: entry (r, c) is the
/// gate entry on the target bits when all other bits agree, zero otherwise.
inline ComplexMatrix embed_oracle(const ComplexMatrix& gate, const std::vector<int>& targets,
                                  int n_qubits) {
  const int dim = 1 << n_qubits;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  int mask = 0;
  for (int t : targets) mask |= 1 << t;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      int gr = 0;
      int gc = 0;
      for (std::size_t i = 0; i < targets.size(); ++i) {
        gr |= ((r >> targets[i]) & 1) << i;
        gc |= ((c >> targets[i]) & 1) << i;
      }
      out(r, c) = gate(gr, gc);
    }
  }
  return out;
}

/// Closed-form Adam trace for a fixed gradient sequence.
inline std::vector<double> adam_trace(double theta, const std::vector<double>& grads, double lr) {
  double m = 0.0;
  double v = 0.0;
  std::vector<double> out;
  for (std::size_t t = 1; t <= grads.size(); ++t) {
    const double g = grads[t - 1];
    m = 0.9 * m + 0.1 * g;
    v = 0.999 * v + 0.001 * g * g;
    const double mh = m / (1.0 - std::pow(0.9, static_cast<double>(t)));
    const double vh = v / (1.0 - std::pow(0.999, static_cast<double>(t)));
    theta -= lr * mh / (std::sqrt(vh) + 1e-8);
    out.push_back(theta);
  }
  return out;
}

inline double max_coefficient_gap(const FourierCoefficients& a, const FourierCoefficients& b) {
  double gap = 0.0;
  for (const auto& [w, c] : a.entries()) gap = std::max(gap, std::abs(c - b.at(w)));
  for (const auto& [w, c] : b.entries()) gap = std::max(gap, std::abs(c - a.at(w)));
  return gap;
}

}  // namespace fqml::testing
