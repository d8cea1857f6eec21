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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fqml {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
/// Fixed-size single-qubit gate; avoids heap traffic on hot paths.
using Gate2 = Eigen::Matrix2cd;

inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-10;

enum class PauliAxis { X, Y, Z };

ComplexMatrix pauli_matrix(PauliAxis axis);

/// e^{-i (angle/2) sigma_axis}.
Gate2 rotation_gate(PauliAxis axis, double angle);
ComplexMatrix rotation(PauliAxis axis, double angle);

/// General single-qubit rotation RZ(omega) RY(theta) RZ(phi).
Gate2 rot_gate(double phi, double theta, double omega);
ComplexMatrix rot(double phi, double theta, double omega);

ComplexMatrix cnot();

/// Largest absolute entry of `a`.
double max_abs(const ComplexMatrix& a);

bool is_unitary(const ComplexMatrix& u, double tol = kUnitaryTolerance);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);

/// Kronecker product a (x) b; `b` occupies the low-order index bits.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Embeds `gate` acting on `targets` into an `n_qubits` register.
/// targets[0] is the least significant bit of the gate's own index.
ComplexMatrix embed(const ComplexMatrix& gate, std::span<const int> targets,
                    int n_qubits);

}  // namespace fqml
