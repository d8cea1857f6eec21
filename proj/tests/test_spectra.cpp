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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fqml/errors.hpp"
#include "support.hpp"

namespace fqml {
namespace {

std::vector<double> omega(const FrequencySpectrum& s) {
  return {s.frequencies().begin(), s.frequencies().end()};
}

std::vector<double> range(int lo, int hi) {
  std::vector<double> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

TEST(SumSpectrum, SingleLayerIsEigenvalueSet) {
  EXPECT_EQ(sum_spectrum(EncodingHamiltonian({-1, 1}), 1), (std::vector<double>{-1, 1}));
}

TEST(SumSpectrum, HalfIntegerThreeLayers) {
  EXPECT_EQ(sum_spectrum(EncodingHamiltonian({-0.5, 0.5}), 3),
            (std::vector<double>{-1.5, -0.5, 0.5, 1.5}));
}

TEST(SumSpectrum, IrregularEigenvalues) {
  EXPECT_EQ(sum_spectrum(EncodingHamiltonian({0, 1, 4}), 2),
            (std::vector<double>{0, 1, 2, 4, 5, 8}));
}

TEST(SumSpectrum, PerLayerGenerators) {
  const std::vector<EncodingHamiltonian> layers{EncodingHamiltonian({0, 1}),
                                                EncodingHamiltonian({0, 3})};
  EXPECT_EQ(sum_spectrum(layers), (std::vector<double>{0, 1, 3, 4}));
}

TEST(SumSpectrum, RejectsZeroLayers) {
  EXPECT_THROW(sum_spectrum(EncodingHamiltonian({0, 1}), 0), InvalidArgument);
}

TEST(EncodingHamiltonian, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(EncodingHamiltonian({}), InvalidArgument);
  EXPECT_THROW(EncodingHamiltonian({0.0, std::nan("")}), InvalidArgument);
  EXPECT_THROW(EncodingHamiltonian({INFINITY}), InvalidArgument);
}

TEST(FrequencySpectrum, PauliPairGivesEvenFrequencies) {
  const auto s = frequency_spectrum(EncodingHamiltonian({-1, 1}), 1);
  EXPECT_EQ(omega(s), (std::vector<double>{-2, 0, 2}));
  EXPECT_EQ(s.size(), 1U);
  EXPECT_EQ(s.degree(), 2.0);
}

TEST(FrequencySpectrum, SingleEigenvalueGivesZeroOnly) {
  const auto s = frequency_spectrum(EncodingHamiltonian({0.7}), 1);
  EXPECT_EQ(omega(s), (std::vector<double>{0}));
  EXPECT_EQ(s.size(), 0U);
}

TEST(FrequencySpectrum, IrregularDifferences) {
  EXPECT_EQ(omega(frequency_spectrum(EncodingHamiltonian({0, 1, 4}), 1)),
            (std::vector<double>{-4, -3, -1, 0, 1, 3, 4}));
}

TEST(FrequencySpectrum, DegenerateEigenvaluesCollapse) {
  EXPECT_EQ(omega(frequency_spectrum(EncodingHamiltonian({1, 1, 1}), 2)),
            (std::vector<double>{0}));
}

TEST(FrequencySpectrum, SnapsRoundingNoise) {
  const auto s = frequency_spectrum(EncodingHamiltonian({0.1, 0.2, 0.3}), 1);
  EXPECT_EQ(s.frequencies().size(), 5U);
  EXPECT_TRUE(s.contains(0.1));
  EXPECT_TRUE(s.contains(-0.2));
}

TEST(FrequencySpectrum, MatchesBruteForceEnumerator) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> eig(-2.0, 2.0);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int d = 1; d <= 3; ++d) {
    for (int layers = 1; layers <= 3; ++layers) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> lambda(static_cast<std::size_t>(d));
        // Half the trials use integers so that coincidences actually occur.
        for (double& v : lambda) v = trial % 2 ? eig(rng) : small(rng);
        const auto got = omega(frequency_spectrum(EncodingHamiltonian(lambda), layers));
        const auto want = testing::brute_force_differences(lambda, layers);
        ASSERT_EQ(got.size(), want.size()) << "d=" << d << " L=" << layers;
        for (std::size_t i = 0; i < got.size(); ++i) {
          EXPECT_NEAR(got[i], want[i], 1e-9 * std::max(1.0, std::abs(want[i])));
        }
      }
    }
  }
}

TEST(FrequencySpectrum, StructuralInvariants) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> eig(-2.0, 2.0);
  std::uniform_int_distribution<int> dims(1, 4);
  std::uniform_int_distribution<int> depth(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> lambda(static_cast<std::size_t>(dims(rng)));
    for (double& v : lambda) v = eig(rng);
    const auto s = frequency_spectrum(EncodingHamiltonian(lambda), depth(rng));
    const auto w = omega(s);
    ASSERT_EQ(w.size() % 2, 1U);
    EXPECT_EQ(s.size(), (w.size() - 1) / 2);
    EXPECT_TRUE(s.contains(0.0));
    EXPECT_EQ(s.degree(), w.back());
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(w[i], -w[w.size() - 1 - i]);
  }
}

TEST(PauliSpectra, ParallelExamples) {
  EXPECT_EQ(omega(parallel_pauli_spectrum(1)), range(-1, 1));
  EXPECT_EQ(omega(parallel_pauli_spectrum(3)), range(-3, 3));
  EXPECT_EQ(omega(parallel_pauli_spectrum(5)), range(-5, 5));
}

TEST(PauliSpectra, SequentialExamples) {
  EXPECT_EQ(omega(sequential_pauli_spectrum(1)), range(-1, 1));
  EXPECT_EQ(omega(sequential_pauli_spectrum(2)), range(-2, 2));
  EXPECT_EQ(omega(sequential_pauli_spectrum(5)), range(-5, 5));
}

TEST(PauliSpectra, SequentialEqualsParallel) {
  for (int r = 1; r <= 8; ++r) {
    EXPECT_EQ(sequential_pauli_spectrum(r), parallel_pauli_spectrum(r)) << "r=" << r;
    EXPECT_EQ(omega(parallel_pauli_spectrum(r)), range(-r, r));
  }
}

TEST(PauliSpectra, OnsiteEigenvaluesFollowBitOrder) {
  EXPECT_EQ(onsite_pauli_eigenvalues(2), (std::vector<double>{1, 0, 0, -1}));
}

TEST(SpectrumSizeBound, Examples) {
  EXPECT_EQ(spectrum_size_bound(2, 1), 1U);
  EXPECT_EQ(spectrum_size_bound(2, 3), 31U);
  EXPECT_EQ(spectrum_size_bound(1, 1), 0U);
  EXPECT_EQ(spectrum_size_bound(3, 1), 3U);
}

TEST(SpectrumSizeBound, Overflow) {
  EXPECT_EQ(spectrum_size_bound(2, 31), (std::uint64_t{1} << 61) - 1);
  EXPECT_THROW(spectrum_size_bound(2, 32), OverflowError);
  EXPECT_THROW(spectrum_size_bound(1000, 4), OverflowError);
}

TEST(SpectrumSizeBound, HoldsForRandomSpectra) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> eig(-2.0, 2.0);
  std::uniform_int_distribution<int> dims(1, 4);
  std::uniform_int_distribution<int> depth(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = dims(rng);
    const int layers = depth(rng);
    std::vector<double> lambda(static_cast<std::size_t>(d));
    for (double& v : lambda) v = eig(rng);
    const auto s = frequency_spectrum(EncodingHamiltonian(lambda), layers);
    EXPECT_LE(s.size(), spectrum_size_bound(d, layers)) << "d=" << d << " L=" << layers;
  }
}

TEST(Rescale, SinglePair) {
  const auto r = rescale_to_integer(frequency_spectrum(EncodingHamiltonian({-1, 1}), 1));
  EXPECT_DOUBLE_EQ(r.base_frequency, 2.0);
  EXPECT_EQ(omega(r.integer_spectrum), range(-1, 1));
}

TEST(Rescale, HalfIntegers) {
  const auto s = FrequencySpectrum::from_values({-1.5, -0.5, 0, 0.5, 1.5});
  const auto r = rescale_to_integer(s);
  EXPECT_DOUBLE_EQ(r.base_frequency, 0.5);
  EXPECT_EQ(omega(r.integer_spectrum), (std::vector<double>{-3, -1, 0, 1, 3}));
  EXPECT_TRUE(r.integer_spectrum.is_integer());
}

TEST(Rescale, Incommensurable) {
  const auto s = FrequencySpectrum::from_values({-std::numbers::pi, -1, 0, 1, std::numbers::pi});
  EXPECT_THROW(rescale_to_integer(s), IncommensurableError);
  const auto root2 = FrequencySpectrum::from_values({-std::sqrt(2.0), -1, 0, 1, std::sqrt(2.0)});
  EXPECT_THROW(rescale_to_integer(root2), IncommensurableError);
}

TEST(Rescale, ZeroOnly) {
  const auto r = rescale_to_integer(FrequencySpectrum::from_values({0}));
  EXPECT_EQ(omega(r.integer_spectrum), (std::vector<double>{0}));
}

TEST(Rescale, RoundTripsRationalSpectra) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_real_distribution<double> scale(0.1, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double unit = scale(rng);
    std::vector<double> lambda(3);
    for (double& v : lambda) v = unit * num(rng) / den(rng);
    const auto s = frequency_spectrum(EncodingHamiltonian(lambda), 1);
    const auto r = rescale_to_integer(s);
    const auto ints = r.integer_spectrum.integers();
    ASSERT_TRUE(ints.has_value());
    ASSERT_EQ(ints->size(), s.frequencies().size());
    for (std::size_t i = 0; i < ints->size(); ++i) {
      const double w = s.frequencies()[i];
      EXPECT_TRUE(snap_equal(static_cast<double>((*ints)[i]) * r.base_frequency, w));
    }
  }
}

TEST(Snapping, IntegerSnap) {
  EXPECT_EQ(snap_to_integer(2.0 + 1e-12), 2.0);
  EXPECT_EQ(snap_to_integer(2.1), 2.1);
  EXPECT_TRUE(snap_equal(1e6, 1e6 + 1e-4));
  EXPECT_FALSE(snap_equal(1.0, 1.0 + 1e-8));
}

}  // namespace
}  // namespace fqml
