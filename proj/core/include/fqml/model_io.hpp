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

// JSON documents for models, targets and parameters, and CSV writers.
//
// Model document:
//   {
//     "n_qubits": 1, "n_features": 1, "input_scale": 1.0,
//     "layers": [ { "trainable": T, "encoding": E }, ... ],
//     "final_trainable": T,
//     "observable": {"kind": "pauli_z", "qubit": 0}
//                 | {"kind": "dense", "entries": [[re, im], ...]},   // row-major
//     "params": [ ... ]                                               // optional
//   }
//   T = {"kind": "ansatz", "circuit": "A" | "B", "sublayers": l}
//     | {"kind": "fixed", "entries": [[re, im], ...]}
//   E = {"kind": "pauli", "axis": "X", "qubit": q, "feature": f}
//     | {"kind": "parallel_pauli", "axis": "X", "qubits": [...], "features": [...]}
//     | {"kind": "diagonal", "blocks": [{"feature": f, "qubits": [...], "eigenvalues": [...]}]}
//
// Target document:
//   {"n_features": N, "degree": K, "coefficients": [{"n": [..], "c": [re, im]}, ...]}
// Coefficients not listed are zero; c_{-n} may be omitted and is then filled
// in by conjugation.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqml/fourier.hpp"
#include "fqml/simulator.hpp"
#include "fqml/universal.hpp"

namespace fqml {

struct ModelDocument {
  CircuitModel model;
  std::optional<std::vector<double>> params;
};

/// Throws ParseError carrying a JSON pointer to the offending value.
ModelDocument parse_model(std::string_view json_text);
TargetSeries parse_target(std::string_view json_text);
/// Accepts a bare array or {"params": [...]}.
std::vector<double> parse_params(std::string_view json_text);

std::string read_text_file(const std::filesystem::path& path);

std::string model_to_json(const CircuitModel& model, std::span<const double> params = {});
std::string target_to_json(const TargetSeries& target);
std::string state_to_json(const StateVector& state);
std::string matrix_to_json(const ComplexMatrix& matrix);
std::string params_to_json(std::span<const double> params);

/// Locale-independent, 17 significant digits.
std::string format_double(double v);

/// freq,re,im sorted by frequency; |c| < 1e-12 written as exact zero.
/// Multivariate frequencies are joined with ';'.
void write_coefficients_csv(std::ostream& out, const FourierCoefficients& coeffs);

}  // namespace fqml
