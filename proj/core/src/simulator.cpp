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

#include "fqml/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include <Eigen/Eigenvalues>

#include "fqml/errors.hpp"

namespace fqml {

int max_qubits() {
  if (const char* env = std::getenv("FOURIER_QML_MAX_QUBITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 30) return static_cast<int>(v);
  }
  return kDefaultMaxQubits;
}

StateVector zero_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw InvalidArgument("qubit count out of range");
  StateVector s = StateVector::Zero(Eigen::Index{1} << n_qubits);
  s(0) = 1.0;
  return s;
}

namespace {

int qubits_of(const StateVector& state) {
  const auto dim = static_cast<std::size_t>(state.size());
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionMismatch("state dimension is not a power of two");
  }
  return std::countr_zero(dim);
}

void apply_single_qubit(StateVector& state, const Gate2& g, int q) {
  // Real arithmetic throughout: std::complex multiplication goes through the
  // NaN-aware library routine and dominates small-register runtimes.
  const double ar = g(0, 0).real(), ai = g(0, 0).imag();
  const double br = g(0, 1).real(), bi = g(0, 1).imag();
  const double cr = g(1, 0).real(), ci = g(1, 0).imag();
  const double dr = g(1, 1).real(), di = g(1, 1).imag();
  const std::size_t stride = std::size_t{1} << q;
  const auto dim = static_cast<std::size_t>(state.size());
  auto* a = reinterpret_cast<double*>(state.data());
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      double* lo = a + 2 * i;
      double* hi = a + 2 * (i + stride);
      const double lr = lo[0], li = lo[1], hr = hi[0], hii = hi[1];
      lo[0] = ar * lr - ai * li + br * hr - bi * hii;
      lo[1] = ar * li + ai * lr + br * hii + bi * hr;
      hi[0] = cr * lr - ci * li + dr * hr - di * hii;
      hi[1] = cr * li + ci * lr + dr * hii + di * hr;
    }
  }
}

void apply_cnot(StateVector& state, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const auto dim = static_cast<std::size_t>(state.size());
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(state(i), state(i | tbit));
  }
}

void check_targets(std::span<const int> targets, int n_qubits) {
  std::size_t mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n_qubits) {
      throw InvalidArgument("target qubit " + std::to_string(t) + " out of range");
    }
    if (mask & (std::size_t{1} << t)) throw InvalidArgument("duplicate target qubit");
    mask |= std::size_t{1} << t;
  }
}

}  // namespace

void apply_gate_inplace(StateVector& state, const ComplexMatrix& gate,
                        std::span<const int> targets) {
  const int n = qubits_of(state);
  const auto k = static_cast<int>(targets.size());
  if (k == 0 || gate.rows() != (Eigen::Index{1} << k) || gate.cols() != gate.rows()) {
    throw DimensionMismatch("gate of size " + std::to_string(gate.rows()) + "x" +
                            std::to_string(gate.cols()) + " does not act on " +
                            std::to_string(k) + " qubit(s)");
  }
  check_targets(targets, n);
  if (k == 1) {
    apply_single_qubit(state, Gate2(gate), targets[0]);
    return;
  }
  std::size_t mask = 0;
  for (int t : targets) mask |= std::size_t{1} << t;
  const std::size_t local_dim = std::size_t{1} << k;
  std::vector<std::size_t> offsets(local_dim, 0);
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (int t = 0; t < k; ++t) {
      if ((l >> t) & 1U) offsets[l] |= std::size_t{1} << targets[t];
    }
  }
  StateVector local(static_cast<Eigen::Index>(local_dim));
  const auto dim = static_cast<std::size_t>(state.size());
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < local_dim; ++l) local(l) = state(base | offsets[l]);
    const StateVector out = gate * local;
    for (std::size_t l = 0; l < local_dim; ++l) state(base | offsets[l]) = out(l);
  }
}

StateVector apply_gate(StateVector state, const ComplexMatrix& gate,
                       std::span<const int> targets) {
  apply_gate_inplace(state, gate, targets);
  return state;
}

// -- Encodings ----------------------------------------------------------------

std::vector<LocalGenerator> local_generators(const EncodingSpec& spec) {
  std::vector<LocalGenerator> out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PauliRotationEncoding>) {
          out.push_back({s.feature, {s.qubit}, 0.5 * pauli_matrix(s.axis)});
        } else if constexpr (std::is_same_v<T, ParallelPauliEncoding>) {
          if (!s.features.empty() && s.features.size() != s.qubits.size()) {
            throw InvalidArgument("parallel encoding: features and qubits differ in length");
          }
          for (std::size_t i = 0; i < s.qubits.size(); ++i) {
            const int f = s.features.empty() ? 0 : s.features[i];
            out.push_back({f, {s.qubits[i]}, 0.5 * pauli_matrix(s.axis)});
          }
        } else {
          for (const DiagonalBlock& b : s.blocks) {
            const auto eig = b.hamiltonian.eigenvalues();
            if (eig.size() != (std::size_t{1} << b.qubits.size())) {
              throw DimensionMismatch("diagonal block needs 2^q eigenvalues for q qubits");
            }
            ComplexMatrix g = ComplexMatrix::Zero(eig.size(), eig.size());
            for (std::size_t i = 0; i < eig.size(); ++i) g(i, i) = eig[i];
            out.push_back({b.feature, b.qubits, std::move(g)});
          }
        }
      },
      spec);
  return out;
}

std::vector<int> encoding_qubits(const EncodingSpec& spec) {
  std::vector<int> qubits;
  for (const LocalGenerator& g : local_generators(spec)) {
    qubits.insert(qubits.end(), g.qubits.begin(), g.qubits.end());
  }
  return qubits;
}

namespace {

// e^{-i t G} for a local generator; Pauli and diagonal generators have closed
// forms, anything else goes through the eigendecomposition.
ComplexMatrix local_evolution(const ComplexMatrix& generator, double t) {
  const bool diagonal = generator.isDiagonal(0.0);
  if (diagonal) {
    ComplexMatrix u = ComplexMatrix::Zero(generator.rows(), generator.cols());
    for (Eigen::Index i = 0; i < generator.rows(); ++i) {
      u(i, i) = std::polar(1.0, -t * generator(i, i).real());
    }
    return u;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(generator);
  const Eigen::VectorXd& eig = es.eigenvalues();
  Eigen::VectorXcd phases(eig.size());
  for (Eigen::Index i = 0; i < eig.size(); ++i) phases(i) = std::polar(1.0, -t * eig(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double feature_value(std::span<const double> x, int feature) {
  if (feature < 0 || static_cast<std::size_t>(feature) >= x.size()) {
    throw DimensionMismatch("encoding refers to feature " + std::to_string(feature) +
                            " but only " + std::to_string(x.size()) + " given");
  }
  return x[static_cast<std::size_t>(feature)];
}

}  // namespace

ComplexMatrix encoding_unitary(const EncodingSpec& spec, std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidArgument("feature values must be finite");
  }
  const auto gens = local_generators(spec);
  const std::vector<int> qubits = encoding_qubits(spec);
  const int n = static_cast<int>(qubits.size());
  check_targets(qubits, 64);
  ComplexMatrix u = ComplexMatrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  int position = 0;
  for (const LocalGenerator& g : gens) {
    std::vector<int> local(g.qubits.size());
    for (std::size_t i = 0; i < local.size(); ++i) local[i] = position++;
    u = embed(local_evolution(g.generator, feature_value(x, g.feature)), local, n) * u;
  }
  return u;
}

namespace {

void apply_encoding(StateVector& state, const EncodingSpec& spec,
                    std::span<const double> x) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PauliRotationEncoding>) {
          apply_single_qubit(state, rotation_gate(s.axis, feature_value(x, s.feature)), s.qubit);
        } else if constexpr (std::is_same_v<T, ParallelPauliEncoding>) {
          for (std::size_t i = 0; i < s.qubits.size(); ++i) {
            const int f = s.features.empty() ? 0 : s.features[i];
            apply_single_qubit(state, rotation_gate(s.axis, feature_value(x, f)), s.qubits[i]);
          }
        } else {
          const auto dim = static_cast<std::size_t>(state.size());
          for (const DiagonalBlock& b : s.blocks) {
            const double t = feature_value(x, b.feature);
            const auto eig = b.hamiltonian.eigenvalues();
            std::vector<Complex> phases(eig.size());
            for (std::size_t i = 0; i < eig.size(); ++i) phases[i] = std::polar(1.0, -t * eig[i]);
            for (std::size_t i = 0; i < dim; ++i) {
              std::size_t l = 0;
              for (std::size_t q = 0; q < b.qubits.size(); ++q) {
                l |= ((i >> b.qubits[q]) & 1U) << q;
              }
              state(i) *= phases[l];
            }
          }
        }
      },
      spec);
}

}  // namespace

// -- Ansatz -------------------------------------------------------------------

int parameter_count(const Ansatz& ansatz, int n_qubits) {
  const int per_qubit = ansatz.kind == AnsatzKind::A ? 3 : 1;
  return ansatz.sublayers * n_qubits * per_qubit;
}

void apply_ansatz(StateVector& state, const Ansatz& ansatz,
                  std::span<const double> params, int n_qubits) {
  if (static_cast<int>(params.size()) != parameter_count(ansatz, n_qubits)) {
    throw ParamCountMismatch("ansatz expects " +
                             std::to_string(parameter_count(ansatz, n_qubits)) +
                             " parameters, got " + std::to_string(params.size()));
  }
  if (qubits_of(state) != n_qubits) throw DimensionMismatch("state/ansatz qubit mismatch");
  std::size_t p = 0;
  for (int layer = 0; layer < ansatz.sublayers; ++layer) {
    for (int q = 0; q < n_qubits; ++q) {
      if (ansatz.kind == AnsatzKind::A) {
        apply_single_qubit(state, rot_gate(params[p], params[p + 1], params[p + 2]), q);
        p += 3;
      } else {
        apply_single_qubit(state, rotation_gate(PauliAxis::X, params[p]), q);
        p += 1;
      }
    }
    if (n_qubits < 2) continue;
    const int range = ansatz.kind == AnsatzKind::A ? (layer % (n_qubits - 1)) + 1 : 1;
    for (int q = 0; q < n_qubits; ++q) apply_cnot(state, q, (q + range) % n_qubits);
  }
}

ComplexMatrix ansatz_unitary(const Ansatz& ansatz, std::span<const double> params,
                             int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexMatrix u(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    StateVector col = StateVector::Zero(dim);
    col(c) = 1.0;
    apply_ansatz(col, ansatz, params, n_qubits);
    u.col(c) = col;
  }
  return u;
}

// -- CircuitModel -------------------------------------------------------------

namespace {

void validate_block(const TrainableBlock& block, int n_qubits) {
  if (const auto* fixed = std::get_if<FixedUnitary>(&block)) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (fixed->matrix.rows() != dim || fixed->matrix.cols() != dim) {
      throw DimensionMismatch("fixed trainable block must be " + std::to_string(dim) +
                              "x" + std::to_string(dim));
    }
    if (!is_unitary(fixed->matrix)) throw NotUnitary("fixed trainable block is not unitary");
  } else {
    const auto& a = std::get<Ansatz>(block);
    if (a.sublayers < 1) throw InvalidArgument("ansatz needs at least one sublayer");
  }
}

void validate_encoding(const EncodingSpec& spec, int n_qubits, int n_features) {
  const auto gens = local_generators(spec);
  if (gens.empty()) throw InvalidArgument("encoding block touches no qubits");
  std::vector<int> qubits;
  for (const LocalGenerator& g : gens) {
    if (g.feature < 0 || g.feature >= n_features) {
      throw InvalidArgument("encoding feature index " + std::to_string(g.feature) +
                            " out of range");
    }
    qubits.insert(qubits.end(), g.qubits.begin(), g.qubits.end());
  }
  check_targets(qubits, n_qubits);
}

}  // namespace

CircuitModel::CircuitModel(int n_qubits, int n_features, std::vector<Layer> layers,
                           TrainableBlock final_trainable, ComplexMatrix observable,
                           double input_scale)
    : n_qubits_(n_qubits),
      n_features_(n_features),
      layers_(std::move(layers)),
      final_trainable_(std::move(final_trainable)),
      observable_(std::move(observable)),
      input_scale_(input_scale) {
  if (n_qubits_ < 1) throw InvalidArgument("model needs at least one qubit");
  if (n_qubits_ > max_qubits()) {
    throw DimensionCap("model uses " + std::to_string(n_qubits_) +
                       " qubits, cap is " + std::to_string(max_qubits()));
  }
  if (n_features_ < 1) throw InvalidArgument("model needs at least one feature");
  if (!(input_scale_ > 0.0) || !std::isfinite(input_scale_)) {
    throw InvalidArgument("input scale must be positive and finite");
  }
  if (layers_.empty()) throw InvalidArgument("model needs at least one encoding layer");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
  if (observable_.rows() != dim || observable_.cols() != dim) {
    throw DimensionMismatch("observable must be " + std::to_string(dim) + "x" +
                            std::to_string(dim));
  }
  if (!is_hermitian(observable_)) throw NotHermitian("observable is not Hermitian");

  for (const TrainableBlock* block : trainable_blocks()) {
    validate_block(*block, n_qubits_);
    block_offsets_.push_back(parameter_count_);
    if (const auto* a = std::get_if<Ansatz>(block)) {
      const int count = fqml::parameter_count(*a, n_qubits_);
      parameter_count_ += count;
      generators_.insert(generators_.end(), static_cast<std::size_t>(count),
                         GeneratorType::pauli_rotation);
    }
  }
  for (const Layer& layer : layers_) validate_encoding(layer.encoding, n_qubits_, n_features_);
}

std::vector<const TrainableBlock*> CircuitModel::trainable_blocks() const {
  std::vector<const TrainableBlock*> out;
  out.reserve(layers_.size() + 1);
  for (const Layer& layer : layers_) out.push_back(&layer.trainable);
  out.push_back(&final_trainable_);
  return out;
}

std::vector<ComplexMatrix> CircuitModel::trainable_unitaries(
    std::span<const double> params) const {
  if (static_cast<int>(params.size()) != parameter_count_) {
    throw ParamCountMismatch("model expects " + std::to_string(parameter_count_) +
                             " parameters, got " + std::to_string(params.size()));
  }
  std::vector<ComplexMatrix> out;
  const auto blocks = trainable_blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (const auto* fixed = std::get_if<FixedUnitary>(blocks[b])) {
      out.push_back(fixed->matrix);
    } else {
      const auto& a = std::get<Ansatz>(*blocks[b]);
      out.push_back(ansatz_unitary(
          a, params.subspan(block_offsets_[b], fqml::parameter_count(a, n_qubits_)),
          n_qubits_));
    }
  }
  return out;
}

CircuitModel CircuitModel::with_input_scale(double scale) const {
  return CircuitModel(n_qubits_, n_features_, layers_, final_trainable_, observable_, scale);
}

namespace {

void apply_block(StateVector& state, const CircuitModel& model, std::size_t index,
                 std::span<const double> params) {
  const TrainableBlock& block = index < model.layers().size()
                                    ? model.layers()[index].trainable
                                    : model.final_trainable();
  if (const auto* fixed = std::get_if<FixedUnitary>(&block)) {
    state = fixed->matrix * state;
  } else {
    const auto& a = std::get<Ansatz>(block);
    apply_ansatz(state, a,
                 params.subspan(model.block_offsets()[index],
                                parameter_count(a, model.n_qubits())),
                 model.n_qubits());
  }
}

}  // namespace

namespace {

void check_params(const CircuitModel& model, std::span<const double> params) {
  if (static_cast<int>(params.size()) != model.parameter_count()) {
    throw ParamCountMismatch("model expects " + std::to_string(model.parameter_count()) +
                             " parameters, got " + std::to_string(params.size()));
  }
}

std::vector<double> scaled_input(const CircuitModel& model, std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.n_features()) {
    throw DimensionMismatch("model expects " + std::to_string(model.n_features()) +
                            " features, got " + std::to_string(x.size()));
  }
  std::vector<double> scaled(x.begin(), x.end());
  for (double& v : scaled) {
    if (!std::isfinite(v)) throw InvalidArgument("feature values must be finite");
    v *= model.input_scale();
  }
  return scaled;
}

// Everything after the first trainable block.
void finish_state(StateVector& state, const CircuitModel& model, std::span<const double> params,
                  std::span<const double> scaled) {
  for (std::size_t l = 0; l < model.layers().size(); ++l) {
    if (l > 0) apply_block(state, model, l, params);
    apply_encoding(state, model.layers()[l].encoding, scaled);
  }
  apply_block(state, model, model.layers().size(), params);
}

double expectation(const CircuitModel& model, const StateVector& psi) {
  const Complex value = psi.dot(model.observable() * psi);
  if (std::abs(value.imag()) > 1e-10 &&
      std::abs(value.imag()) > 1e-10 * max_abs(model.observable())) {
    throw Error("expectation value has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

StateVector prepare_state(const CircuitModel& model, std::span<const double> params,
                          std::span<const double> x) {
  check_params(model, params);
  const std::vector<double> scaled = scaled_input(model, x);
  StateVector state = zero_state(model.n_qubits());
  apply_block(state, model, 0, params);
  finish_state(state, model, params, scaled);
  return state;
}

std::vector<double> evaluate_batch(const CircuitModel& model, std::span<const double> params,
                                   std::span<const std::vector<double>> inputs) {
  check_params(model, params);
  StateVector head = zero_state(model.n_qubits());
  apply_block(head, model, 0, params);
  std::vector<double> out;
  out.reserve(inputs.size());
  StateVector state;
  for (const std::vector<double>& x : inputs) {
    const std::vector<double> scaled = scaled_input(model, x);
    state = head;
    finish_state(state, model, params, scaled);
    out.push_back(expectation(model, state));
  }
  return out;
}

double evaluate(const CircuitModel& model, std::span<const double> params,
                std::span<const double> x) {
  return expectation(model, prepare_state(model, params, x));
}

Diagonalization diagonalize_generator(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw DimensionMismatch("generator must be square");
  if (!is_hermitian(h)) throw NotHermitian("generator is not Hermitian");
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
  const Eigen::VectorXd& eig = es.eigenvalues();
  return {EncodingHamiltonian(std::vector<double>(eig.data(), eig.data() + eig.size())),
          es.eigenvectors().adjoint()};
}

}  // namespace fqml
