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

// Frequency spectra of data-encoding Hamiltonians.
//
// A model that encodes x through L gates e^{-ixH} has access to the
// frequencies Omega = { Lambda_k - Lambda_j }, where Lambda_j ranges over the
// L-fold sums of eigenvalues of H. Everything here is pure combinatorics on
// eigenvalue lists.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fqml {

/// Relative tolerance under which two frequencies are the same.
inline constexpr double kSnapTolerance = 1e-9;

/// |a - b| <= kSnapTolerance * max(1, |a|, |b|).
bool snap_equal(double a, double b);

/// Replaces `v` by the nearest integer if it is one within kSnapTolerance.
double snap_to_integer(double v);

/// Sorts and merges values that are snap_equal; integer-valued entries are
/// stored as exact integers.
std::vector<double> dedupe_snapped(std::vector<double> values);

class EncodingHamiltonian {
 public:
  /// Eigenvalues of a diagonal generator. Degenerate values are kept.
  explicit EncodingHamiltonian(std::vector<double> eigenvalues);

  std::span<const double> eigenvalues() const { return eigenvalues_; }
  int dimension() const { return static_cast<int>(eigenvalues_.size()); }

 private:
  std::vector<double> eigenvalues_;
};

/// The symmetric set Omega, its size K = (|Omega| - 1) / 2 and degree
/// D = max(Omega).
class FrequencySpectrum {
 public:
  /// Builds a spectrum from an arbitrary collection of differences. The input
  /// must already be closed under negation up to snapping; only the
  /// nonnegative half is used and mirrored.
  static FrequencySpectrum from_values(std::vector<double> values);

  /// {-n, ..., n}.
  static FrequencySpectrum integer_range(int n);

  std::span<const double> frequencies() const { return frequencies_; }
  std::size_t size() const { return (frequencies_.size() - 1) / 2; }
  double degree() const { return frequencies_.back(); }

  bool contains(double omega) const;
  bool is_integer() const;

  /// Integer frequencies, or nullopt if any member is not an integer.
  std::optional<std::vector<std::int64_t>> integers() const;

  FrequencySpectrum scaled(double factor) const;

  friend bool operator==(const FrequencySpectrum&, const FrequencySpectrum&) = default;

 private:
  explicit FrequencySpectrum(std::vector<double> sorted) : frequencies_(std::move(sorted)) {}

  std::vector<double> frequencies_;
};

/// All sums lambda_{j_1} + ... + lambda_{j_L}, deduplicated.
std::vector<double> sum_spectrum(const EncodingHamiltonian& h, int layers);

/// Sumset over a sequence of possibly different generators, one per layer.
std::vector<double> sum_spectrum(std::span<const EncodingHamiltonian> layers);

FrequencySpectrum frequency_spectrum(const EncodingHamiltonian& h, int layers);
FrequencySpectrum frequency_spectrum(std::span<const EncodingHamiltonian> layers);

/// Eigenvalues of sum_{q=1}^r sigma_z^{(q)} / 2 in basis order (qubit 0 is
/// the least significant bit).
std::vector<double> onsite_pauli_eigenvalues(int n_qubits);

/// r Pauli rotations in parallel (one layer, r qubits).
FrequencySpectrum parallel_pauli_spectrum(int repetitions);

/// One Pauli rotation repeated in r sequential layers.
FrequencySpectrum sequential_pauli_spectrum(int repetitions);

/// floor(d^{2L} / 2) - 1, clamped at 0. Throws OverflowError if d^{2L} does
/// not fit in 64 bits.
std::uint64_t spectrum_size_bound(std::uint64_t dimension, std::uint64_t layers);

struct RescaledSpectrum {
  double base_frequency;
  FrequencySpectrum integer_spectrum;
};

inline constexpr std::int64_t kMaxDenominator = 1'000'000;
inline constexpr double kCommensurabilityTolerance = 1e-9;

/// Writes every frequency as n * omega0 with the largest such omega0.
/// Throws IncommensurableError when some ratio has no rational approximation
/// p/q with q <= kMaxDenominator and |q * ratio - p| <= kCommensurabilityTolerance.
RescaledSpectrum rescale_to_integer(const FrequencySpectrum& spectrum);

}  // namespace fqml
