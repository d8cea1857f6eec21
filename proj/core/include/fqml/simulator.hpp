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

// Dense statevector simulation of layered models
//
//   U(x) = W^(L+1) S(x) W^(L) ... W^(2) S(x) W^(1),   f(x) = <0|U^dag M U|0>.
//
// Qubit 0 is the least significant bit of a basis-state index.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "fqml/linalg.hpp"
#include "fqml/spectra.hpp"

namespace fqml {

inline constexpr int kDefaultMaxQubits = 12;

/// Qubit cap for dense simulation; FOURIER_QML_MAX_QUBITS overrides the default.
int max_qubits();

StateVector zero_state(int n_qubits);

/// Applies `gate` to `targets` in place. targets[0] is the gate's low bit.
void apply_gate_inplace(StateVector& state, const ComplexMatrix& gate,
                        std::span<const int> targets);

StateVector apply_gate(StateVector state, const ComplexMatrix& gate,
                       std::span<const int> targets);

// -- Encoding blocks --------------------------------------------------------

/// e^{-i x sigma/2} on one qubit.
struct PauliRotationEncoding {
  PauliAxis axis = PauliAxis::X;
  int qubit = 0;
  int feature = 0;
};

/// The same Pauli rotation on several qubits in one layer. `features[i]` is
/// the feature fed to `qubits[i]`; an empty list means feature 0 everywhere.
struct ParallelPauliEncoding {
  PauliAxis axis = PauliAxis::X;
  std::vector<int> qubits;
  std::vector<int> features;
};

/// A diagonal generator on a group of qubits, driven by one feature.
struct DiagonalBlock {
  int feature = 0;
  std::vector<int> qubits;
  EncodingHamiltonian hamiltonian;
};

struct DiagonalEncoding {
  std::vector<DiagonalBlock> blocks;
};

using EncodingSpec =
    std::variant<PauliRotationEncoding, ParallelPauliEncoding, DiagonalEncoding>;

/// One commuting piece of an encoding block: e^{-i x_feature generator} on
/// `qubits`.
struct LocalGenerator {
  int feature = 0;
  std::vector<int> qubits;
  ComplexMatrix generator;
};

std::vector<LocalGenerator> local_generators(const EncodingSpec& spec);

/// Qubits touched by the spec, in the order used by encoding_unitary.
std::vector<int> encoding_qubits(const EncodingSpec& spec);

/// e^{-i sum_f x_f H_f} restricted to encoding_qubits(spec).
ComplexMatrix encoding_unitary(const EncodingSpec& spec, std::span<const double> x);

// -- Trainable blocks -------------------------------------------------------

enum class AnsatzKind {
  /// Per qubit Rot(phi, theta, omega), then a CNOT ring i -> i + s with
  /// s = (sublayer mod (n - 1)) + 1.
  A,
  /// Per qubit RX(theta), then a nearest-neighbour CNOT ring.
  B,
};

struct Ansatz {
  int sublayers = 1;
  AnsatzKind kind = AnsatzKind::A;
};

struct FixedUnitary {
  ComplexMatrix matrix;
};

using TrainableBlock = std::variant<FixedUnitary, Ansatz>;

int parameter_count(const Ansatz& ansatz, int n_qubits);

/// Dense unitary of an ansatz block. Parameters are laid out sublayer-major,
/// then by qubit, then (phi, theta, omega) for kind A.
ComplexMatrix ansatz_unitary(const Ansatz& ansatz, std::span<const double> params,
                             int n_qubits);

void apply_ansatz(StateVector& state, const Ansatz& ansatz,
                  std::span<const double> params, int n_qubits);

// -- Models -----------------------------------------------------------------

struct Layer {
  TrainableBlock trainable;
  EncodingSpec encoding;
};

/// How a trainable parameter enters the circuit; decides the gradient rule.
enum class GeneratorType {
  unspecified,
  /// Angle of e^{-i theta P / 2} with P a Pauli word: two-term shift rule.
  pauli_rotation,
  /// Any smooth dependence: central differences.
  generic,
};

class CircuitModel {
 public:
  CircuitModel(int n_qubits, int n_features, std::vector<Layer> layers,
               TrainableBlock final_trainable, ComplexMatrix observable,
               double input_scale = 1.0);

  int n_qubits() const { return n_qubits_; }
  int n_features() const { return n_features_; }
  double input_scale() const { return input_scale_; }
  int encoding_layers() const { return static_cast<int>(layers_.size()); }
  const std::vector<Layer>& layers() const { return layers_; }
  const TrainableBlock& final_trainable() const { return final_trainable_; }
  const ComplexMatrix& observable() const { return observable_; }

  /// All L + 1 trainable blocks in circuit order.
  std::vector<const TrainableBlock*> trainable_blocks() const;

  int parameter_count() const { return parameter_count_; }
  /// Offset of each trainable block's parameters in the flat vector.
  const std::vector<int>& block_offsets() const { return block_offsets_; }
  const std::vector<GeneratorType>& parameter_generators() const { return generators_; }

  /// Dense matrices of the L + 1 trainable blocks for the given parameters.
  std::vector<ComplexMatrix> trainable_unitaries(std::span<const double> params) const;

  /// Same model with a different pre-processing factor.
  CircuitModel with_input_scale(double scale) const;

 private:
  int n_qubits_;
  int n_features_;
  std::vector<Layer> layers_;
  TrainableBlock final_trainable_;
  ComplexMatrix observable_;
  double input_scale_;
  int parameter_count_ = 0;
  std::vector<int> block_offsets_;
  std::vector<GeneratorType> generators_;
};

/// U(scale * x, theta)|0>.
StateVector prepare_state(const CircuitModel& model, std::span<const double> params,
                          std::span<const double> x);

/// Re <psi|M|psi>. Throws ParamCountMismatch / DimensionMismatch on bad input.
double evaluate(const CircuitModel& model, std::span<const double> params,
                std::span<const double> x);

/// evaluate() at every input; the input-independent first block is applied
/// once.
std::vector<double> evaluate_batch(const CircuitModel& model, std::span<const double> params,
                                   std::span<const std::vector<double>> inputs);

/// Eigendecomposition H = V^dag Sigma V with eigenvalues ascending.
struct Diagonalization {
  EncodingHamiltonian hamiltonian;
  ComplexMatrix basis_change;  // V
};

Diagonalization diagonalize_generator(const ComplexMatrix& h);

}  // namespace fqml
