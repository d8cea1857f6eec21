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

#include "fqml/spectra.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numeric>

#include "fqml/errors.hpp"

namespace fqml {

bool snap_equal(double a, double b) {
  return std::abs(a - b) <=
         kSnapTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

double snap_to_integer(double v) {
  const double r = std::round(v);
  return snap_equal(v, r) ? r + 0.0 : v;
}

std::vector<double> dedupe_snapped(std::vector<double> values) {
  for (double& v : values) v = snap_to_integer(v);
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    if (out.empty() || !snap_equal(out.back(), v)) out.push_back(v);
  }
  return out;
}

EncodingHamiltonian::EncodingHamiltonian(std::vector<double> eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
  if (eigenvalues_.empty()) {
    throw InvalidArgument("encoding Hamiltonian needs at least one eigenvalue");
  }
  for (double v : eigenvalues_) {
    if (!std::isfinite(v)) throw InvalidArgument("eigenvalues must be finite");
  }
}

FrequencySpectrum FrequencySpectrum::from_values(std::vector<double> values) {
  for (double& v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("frequencies must be finite");
    v = std::abs(v);
  }
  values.push_back(0.0);
  std::vector<double> half = dedupe_snapped(std::move(values));
  // The first entry is (snapped to) zero; anything within tolerance of zero
  // merged into it.
  half.front() = 0.0;
  std::vector<double> full;
  full.reserve(2 * half.size() - 1);
  for (auto it = half.rbegin(); it != half.rend() - 1; ++it) full.push_back(-*it);
  full.insert(full.end(), half.begin(), half.end());
  return FrequencySpectrum(std::move(full));
}

FrequencySpectrum FrequencySpectrum::integer_range(int n) {
  if (n < 0) throw InvalidArgument("integer_range needs n >= 0");
  std::vector<double> f;
  for (int k = -n; k <= n; ++k) f.push_back(k);
  return FrequencySpectrum(std::move(f));
}

bool FrequencySpectrum::contains(double omega) const {
  auto it = std::lower_bound(frequencies_.begin(), frequencies_.end(),
                             omega - kSnapTolerance * std::max(1.0, std::abs(omega)));
  return it != frequencies_.end() && snap_equal(*it, omega);
}

bool FrequencySpectrum::is_integer() const {
  return std::all_of(frequencies_.begin(), frequencies_.end(),
                     [](double v) { return v == std::round(v); });
}

std::optional<std::vector<std::int64_t>> FrequencySpectrum::integers() const {
  if (!is_integer()) return std::nullopt;
  std::vector<std::int64_t> out;
  out.reserve(frequencies_.size());
  for (double v : frequencies_) out.push_back(static_cast<std::int64_t>(v));
  return out;
}

FrequencySpectrum FrequencySpectrum::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw InvalidArgument("scale factor must be positive");
  }
  std::vector<double> v(frequencies_.begin(), frequencies_.end());
  for (double& x : v) x *= factor;
  return from_values(std::move(v));
}

std::vector<double> sum_spectrum(std::span<const EncodingHamiltonian> layers) {
  if (layers.empty()) throw InvalidArgument("need at least one encoding layer");
  std::vector<double> sums{0.0};
  for (const auto& h : layers) {
    const std::vector<double> eig =
        dedupe_snapped({h.eigenvalues().begin(), h.eigenvalues().end()});
    std::vector<double> next;
    next.reserve(sums.size() * eig.size());
    for (double s : sums) {
      for (double e : eig) next.push_back(s + e);
    }
    sums = dedupe_snapped(std::move(next));
  }
  return sums;
}

std::vector<double> sum_spectrum(const EncodingHamiltonian& h, int layers) {
  if (layers < 1) throw InvalidArgument("number of layers must be >= 1");
  const std::vector<EncodingHamiltonian> repeated(static_cast<std::size_t>(layers), h);
  return sum_spectrum(repeated);
}

FrequencySpectrum frequency_spectrum(std::span<const EncodingHamiltonian> layers) {
  const std::vector<double> sums = sum_spectrum(layers);
  std::vector<double> diffs;
  diffs.reserve(sums.size() * sums.size());
  for (double a : sums) {
    for (double b : sums) diffs.push_back(a - b);
  }
  return FrequencySpectrum::from_values(std::move(diffs));
}

FrequencySpectrum frequency_spectrum(const EncodingHamiltonian& h, int layers) {
  if (layers < 1) throw InvalidArgument("number of layers must be >= 1");
  const std::vector<EncodingHamiltonian> repeated(static_cast<std::size_t>(layers), h);
  return frequency_spectrum(repeated);
}

std::vector<double> onsite_pauli_eigenvalues(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw InvalidArgument("on-site Pauli generator needs 1..30 qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<double> eig(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    // sigma_z |0> = +|0>, so each set bit contributes -1/2.
    eig[b] = 0.5 * n_qubits - static_cast<double>(std::popcount(b));
  }
  return eig;
}

FrequencySpectrum parallel_pauli_spectrum(int repetitions) {
  if (repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
  return frequency_spectrum(EncodingHamiltonian(onsite_pauli_eigenvalues(repetitions)), 1);
}

FrequencySpectrum sequential_pauli_spectrum(int repetitions) {
  if (repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
  return frequency_spectrum(EncodingHamiltonian({-0.5, 0.5}), repetitions);
}

std::uint64_t spectrum_size_bound(std::uint64_t dimension, std::uint64_t layers) {
  if (dimension < 1 || layers < 1) {
    throw InvalidArgument("dimension and layers must be >= 1");
  }
  std::uint64_t power = 1;
  for (std::uint64_t i = 0; i < 2 * layers; ++i) {
    if (power > std::numeric_limits<std::uint64_t>::max() / dimension) {
      throw OverflowError("d^(2L) exceeds 64-bit range");
    }
    power *= dimension;
  }
  const std::uint64_t half = power / 2;
  return half == 0 ? 0 : half - 1;
}

namespace {

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

std::optional<Fraction> rational_approximation(double x) {
  std::int64_t h_prev = 1, h_prev2 = 0;
  std::int64_t k_prev = 0, k_prev2 = 1;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(rest);
    if (a_real > static_cast<double>(kMaxDenominator) * (std::abs(x) + 1.0)) {
      return std::nullopt;
    }
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t h = a * h_prev + h_prev2;
    const std::int64_t k = a * k_prev + k_prev2;
    if (k > kMaxDenominator) return std::nullopt;
    if (std::abs(static_cast<double>(k) * x - static_cast<double>(h)) <=
        kCommensurabilityTolerance) {
      return Fraction{h, k};
    }
    const double frac = rest - a_real;
    if (frac <= 0.0) return std::nullopt;
    rest = 1.0 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

}  // namespace

RescaledSpectrum rescale_to_integer(const FrequencySpectrum& spectrum) {
  std::vector<double> positive;
  for (double w : spectrum.frequencies()) {
    if (w > 0.0) positive.push_back(w);
  }
  if (positive.empty()) {
    return {1.0, FrequencySpectrum::integer_range(0)};
  }
  const double ref = positive.front();
  std::vector<Fraction> ratios;
  std::int64_t common_den = 1;
  for (double w : positive) {
    const auto frac = rational_approximation(w / ref);
    if (!frac) {
      throw IncommensurableError("frequency ratio " + std::to_string(w / ref) +
                                 " has no rational approximation within tolerance");
    }
    common_den = std::lcm(common_den, frac->den);
    if (common_den > kMaxDenominator) {
      throw IncommensurableError("common denominator exceeds cap");
    }
    ratios.push_back(*frac);
  }
  std::int64_t g = 0;
  std::vector<std::int64_t> multiples;
  for (const Fraction& f : ratios) {
    multiples.push_back(f.num * (common_den / f.den));
    g = std::gcd(g, multiples.back());
  }
  const double base = ref * static_cast<double>(g) / static_cast<double>(common_den);
  std::vector<double> ints;
  for (std::size_t i = 0; i < multiples.size(); ++i) {
    const std::int64_t n = multiples[i] / g;
    if (!snap_equal(static_cast<double>(n) * base, positive[i])) {
      throw IncommensurableError("rescaled spectrum does not reproduce input");
    }
    ints.push_back(static_cast<double>(n));
  }
  return {base, FrequencySpectrum::from_values(std::move(ints))};
}

}  // namespace fqml
