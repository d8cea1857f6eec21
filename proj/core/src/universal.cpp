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

#include "fqml/universal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fqml/errors.hpp"

namespace fqml {

EncodingHamiltonian UniversalHamiltonianFamily::member(int m) {
  return EncodingHamiltonian(onsite_pauli_eigenvalues(m));
}

FrequencySpectrum UniversalHamiltonianFamily::spectrum(int m) {
  return frequency_spectrum(member(m), 1);
}

int UniversalHamiltonianFamily::smallest_member_for_degree(int degree) {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  return std::max(degree, 1);
}

namespace {

bool lexicographically_positive(const Frequency& n) {
  for (double v : n) {
    if (v != 0.0) return v > 0.0;
  }
  return false;
}

Frequency negated(const Frequency& n) {
  Frequency out(n);
  for (double& v : out) v = v == 0.0 ? 0.0 : -v;
  return out;
}

}  // namespace

TargetSeries::TargetSeries(int n_features, int degree, const FourierCoefficients& coefficients)
    : n_features_(n_features), degree_(degree), coefficients_(n_features) {
  if (n_features < 1) throw InvalidArgument("target needs at least one feature");
  if (degree < 0) throw InvalidArgument("target degree must be >= 0");
  if (coefficients.n_features() != n_features) {
    throw DimensionMismatch("coefficient keys do not match feature count");
  }
  for (const auto& [n, c] : coefficients.entries()) {
    for (double v : n) {
      if (v != std::round(v) || std::abs(v) > degree) {
        throw InvalidArgument("target frequency outside Z_K^N");
      }
    }
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidArgument("target coefficients must be finite");
    }
  }
  for (const auto& [n, c] : coefficients.entries()) {
    const Frequency minus = negated(n);
    const bool has_partner = coefficients.entries().count(minus) > 0;
    const Complex partner = coefficients.at(minus);
    if (!lexicographically_positive(n) && !lexicographically_positive(minus)) {
      // n == 0
      if (std::abs(c.imag()) > kSymmetryTolerance * std::max(1.0, std::abs(c))) {
        throw AsymmetricCoefficients("c_0 must be real");
      }
      coefficients_.set(n, c.real());
      continue;
    }
    if (has_partner &&
        std::abs(partner - std::conj(c)) > kSymmetryTolerance * std::max(1.0, std::abs(c))) {
      throw AsymmetricCoefficients("target violates c_{-n} = conj(c_n)");
    }
    const Frequency& pos = lexicographically_positive(n) ? n : minus;
    const Complex cpos = lexicographically_positive(n) ? c : std::conj(c);
    coefficients_.set(pos, cpos);
    coefficients_.set(negated(pos), std::conj(cpos));
  }
}

Complex TargetSeries::at(const std::vector<int>& n) const {
  return coefficients_.at(Frequency(n.begin(), n.end()));
}

double TargetSeries::operator()(std::span<const double> x) const {
  return eval_series(coefficients_, x);
}

ComplexMatrix householder_to(const StateVector& gamma) {
  const Eigen::Index dim = gamma.size();
  if (dim == 0 || std::abs(gamma.norm() - 1.0) > kNormTolerance) {
    throw InvalidArgument("target state must be normalised");
  }
  const double phase = std::arg(gamma(0));
  const StateVector rotated = gamma * std::polar(1.0, -phase);
  StateVector v = -rotated;
  v(0) += 1.0;
  const double vv = v.squaredNorm();
  ComplexMatrix h = ComplexMatrix::Identity(dim, dim);
  if (vv > 1e-30) h -= (2.0 / vv) * v * v.adjoint();
  return std::polar(1.0, phase) * h;
}

UniversalModel build_universal_model(const TargetSeries& target) {
  const int n_features = target.n_features();
  const int degree = target.degree();
  if (n_features > 3) throw DimensionCap("universal construction supports N <= 3");
  const int m = UniversalHamiltonianFamily::smallest_member_for_degree(degree);
  const int n_qubits = n_features * m;
  if (n_qubits > 12 || n_qubits > max_qubits()) {
    throw DimensionCap("universal model needs " + std::to_string(n_qubits) +
                       " qubits, cap is " + std::to_string(std::min(12, max_qubits())));
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t local_dim = std::size_t{1} << m;
  const std::vector<double> local = onsite_pauli_eigenvalues(m);

  std::vector<std::vector<int>> lambda(dim, std::vector<int>(n_features));
  for (std::size_t i = 0; i < dim; ++i) {
    for (int f = 0; f < n_features; ++f) {
      // Eigenvalues are half-integers with a common offset m/2, so their
      // differences are the integer differences of popcounts.
      const std::size_t b = (i >> (f * m)) & (local_dim - 1);
      lambda[i][f] = -static_cast<int>(std::popcount(b));
    }
  }

  const StateVector gamma =
      StateVector::Constant(static_cast<Eigen::Index>(dim), 1.0 / std::sqrt(static_cast<double>(dim)));
  ComplexMatrix observable = ComplexMatrix::Zero(dim, dim);
  std::vector<std::pair<std::size_t, std::size_t>> selection{{0, 0}};

  const double weight = static_cast<double>(dim);
  FourierCoefficients::Map assigned;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      bool in_range = true;
      Frequency n(n_features);
      for (int f = 0; f < n_features; ++f) {
        n[f] = lambda[j][f] - lambda[k][f];
        in_range = in_range && std::abs(n[f]) <= degree;
      }
      if (!in_range || !lexicographically_positive(n) || assigned.count(n)) continue;
      assigned.emplace(n, Complex{});
      selection.emplace_back(j, k);
      const Complex c = target.coefficients().at(n);
      observable(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = weight * c;
      observable(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = weight * std::conj(c);
    }
  }
  observable(0, 0) = weight * target.coefficients().at(Frequency(n_features, 0.0)).real();

  DiagonalEncoding encoding;
  for (int f = 0; f < n_features; ++f) {
    std::vector<int> qubits(m);
    for (int q = 0; q < m; ++q) qubits[q] = f * m + q;
    encoding.blocks.push_back({f, std::move(qubits), EncodingHamiltonian(local)});
  }
  CircuitModel model(n_qubits, n_features,
                     {Layer{FixedUnitary{householder_to(gamma)}, std::move(encoding)}},
                     FixedUnitary{ComplexMatrix::Identity(dim, dim)}, observable);
  return {m, gamma, std::move(observable), std::move(selection), std::move(model)};
}

double verify_universal(const UniversalModel& built, const TargetSeries& target, int n_points,
                        std::uint64_t seed) {
  if (n_points < 1) throw InvalidArgument("need at least one verification point");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<double> x(static_cast<std::size_t>(target.n_features()));
  double worst = 0.0;
  for (int p = 0; p < n_points; ++p) {
    for (double& v : x) v = uniform(rng);
    worst = std::max(worst, std::abs(evaluate(built.model, {}, x) - target(x)));
  }
  return worst;
}

}  // namespace fqml
