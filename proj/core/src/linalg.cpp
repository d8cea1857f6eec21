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

#include "fqml/linalg.hpp"

#include <cmath>

#include "fqml/errors.hpp"

namespace fqml {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ComplexMatrix pauli_matrix(PauliAxis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case PauliAxis::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case PauliAxis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

Gate2 rotation_gate(PauliAxis axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Gate2 m;
  switch (axis) {
    case PauliAxis::X:
      m << c, -kI * s, -kI * s, c;
      break;
    case PauliAxis::Y:
      m << c, -s, s, c;
      break;
    case PauliAxis::Z:
      m << Complex(c, -s), 0.0, 0.0, Complex(c, s);
      break;
  }
  return m;
}

ComplexMatrix rotation(PauliAxis axis, double angle) { return rotation_gate(axis, angle); }

Gate2 rot_gate(double phi, double theta, double omega) {
  // RZ(omega) RY(theta) RZ(phi) multiplied out.
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const double sum = (phi + omega) / 2.0;
  const double diff = (phi - omega) / 2.0;
  Gate2 m;
  m << std::polar(c, -sum), -std::polar(s, diff), std::polar(s, -diff), std::polar(c, sum);
  return m;
}

ComplexMatrix rot(double phi, double theta, double omega) { return rot_gate(phi, theta, omega); }

ComplexMatrix cnot() {
  // Control is targets[0] (low bit), target is targets[1] (high bit).
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(2, 2) = 1.0;
  m(3, 1) = 1.0;
  m(1, 3) = 1.0;
  return m;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const auto n = u.rows();
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(n, n)) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& gate, std::span<const int> targets,
                    int n_qubits) {
  const auto k = static_cast<int>(targets.size());
  if (gate.rows() != (Eigen::Index{1} << k) || gate.cols() != gate.rows()) {
    throw DimensionMismatch("gate dimension does not match target count");
  }
  std::size_t target_mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n_qubits) throw InvalidArgument("target qubit out of range");
    if (target_mask & (std::size_t{1} << t)) {
      throw InvalidArgument("duplicate target qubit");
    }
    target_mask |= std::size_t{1} << t;
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  auto local_index = [&](std::size_t i) {
    std::size_t l = 0;
    for (int t = 0; t < k; ++t) l |= ((i >> targets[t]) & 1U) << t;
    return l;
  };
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const std::size_t rest = row & ~target_mask;
    const std::size_t lr = local_index(row);
    for (std::size_t lc = 0; lc < (std::size_t{1} << k); ++lc) {
      std::size_t col = rest;
      for (int t = 0; t < k; ++t) col |= ((lc >> t) & 1U) << targets[t];
      out(row, col) = gate(lr, lc);
    }
  }
  return out;
}

}  // namespace fqml
