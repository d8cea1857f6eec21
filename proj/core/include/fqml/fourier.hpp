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

// Fourier representation f(x) = sum_w c_w e^{i w.x} of a model.
//
// Two independent extraction routes are provided and each is used to check
// the other: path-amplitude summation over eigenvalue multi-indices
// (coefficients_exact) and sampling plus a discrete transform
// (coefficients_dft). coefficients_multivariate evaluates the closed form for
// a single encoding layer, f = sum_{j,k} conj(g_j) g_k M_jk e^{i x.(l_j - l_k)}
// (encoding gates are e^{-ixH}).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fqml/linalg.hpp"
#include "fqml/simulator.hpp"
#include "fqml/spectra.hpp"

namespace fqml {

/// A frequency vector, one entry per feature.
using Frequency = std::vector<double>;

/// Lexicographic order that treats snap_equal components as equal.
struct FrequencyLess {
  bool operator()(const Frequency& a, const Frequency& b) const;
};

inline constexpr double kSymmetryTolerance = 1e-10;
/// Coefficients below this magnitude are reported as exact zeros.
inline constexpr double kZeroCoefficient = 1e-12;

class FourierCoefficients {
 public:
  using Map = std::map<Frequency, Complex, FrequencyLess>;

  explicit FourierCoefficients(int n_features = 1);

  int n_features() const { return n_features_; }
  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Adds `value` to the coefficient of `omega`; integer-valued components
  /// are snapped.
  void add(Frequency omega, Complex value);
  void set(Frequency omega, Complex value);

  /// c_omega, or 0 if omega is not stored.
  Complex at(const Frequency& omega) const;
  Complex at(double omega) const { return at(Frequency{omega}); }

  /// Max over stored omega of |c_{-omega} - conj(c_omega)|.
  double symmetry_defect() const;
  bool is_conjugate_symmetric(double tol = kSymmetryTolerance) const;

  /// Copy with |c| < tol replaced by exact zero.
  FourierCoefficients cleaned(double tol = kZeroCoefficient) const;

  /// True if every stored frequency has integer components.
  bool is_integer() const;

 private:
  int n_features_;
  Map entries_;
};

/// Table a_{k,j} over pairs of eigenvalue paths, and the frequency
/// Lambda_k - Lambda_j each entry contributes to.
struct PathAmplitudeTable {
  /// Lambda_j per path (already multiplied by the model's input scale).
  std::vector<Frequency> path_sums;
  /// amplitudes(k, j) = a_{k,j}.
  ComplexMatrix amplitudes;
};

inline constexpr std::uint64_t kMaxPathPairs = 1'000'000;

/// Throws TooManyPaths if d^{2L} exceeds kMaxPathPairs.
PathAmplitudeTable path_amplitudes(const CircuitModel& model, std::span<const double> params);

/// Groups the path-amplitude table by frequency.
FourierCoefficients coefficients_exact(const CircuitModel& model,
                                       std::span<const double> params);

/// Frequency spectrum of each feature implied by the model's encodings and
/// input scale.
std::vector<FrequencySpectrum> model_spectra(const CircuitModel& model);

/// Samples f on a (2D+1)-point grid per feature and transforms. `spectra`
/// holds one integer spectrum per feature (a single entry is reused for all
/// features). Throws NonIntegerSpectrum otherwise.
FourierCoefficients coefficients_dft(const CircuitModel& model, std::span<const double> params,
                                     std::span<const FrequencySpectrum> spectra);
FourierCoefficients coefficients_dft(const CircuitModel& model, std::span<const double> params);

/// Closed form for state `gamma`, observable `observable` and one diagonal
/// generator per feature (feature 0 on the lowest index bits).
FourierCoefficients coefficients_multivariate(const StateVector& gamma,
                                              const ComplexMatrix& observable,
                                              std::span<const EncodingHamiltonian> hamiltonians);

/// sum_w c_w e^{i w.x}; throws AsymmetricCoefficients if the series is not
/// real-valued.
double eval_series(const FourierCoefficients& coeffs, std::span<const double> x);
double eval_series(const FourierCoefficients& coeffs, double x);

/// sqrt(sum_w |a_w - b_w|^2) over the union of supports; the normalised L2
/// distance on [0, 2pi)^N. Throws GridMismatch unless both are integer series
/// in the same number of features.
double series_distance(const FourierCoefficients& a, const FourierCoefficients& b);

}  // namespace fqml
