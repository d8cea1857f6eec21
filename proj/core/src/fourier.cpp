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

#include "fqml/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "fqml/errors.hpp"

namespace fqml {

bool FrequencyLess::operator()(const Frequency& a, const Frequency& b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (snap_equal(a[i], b[i])) continue;
    return a[i] < b[i];
  }
  return a.size() < b.size();
}

FourierCoefficients::FourierCoefficients(int n_features) : n_features_(n_features) {
  if (n_features < 1) throw InvalidArgument("coefficients need at least one feature");
}

namespace {

Frequency snapped(Frequency omega) {
  for (double& w : omega) w = snap_to_integer(w);
  return omega;
}

Frequency negated(const Frequency& omega) {
  Frequency out(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) out[i] = omega[i] == 0.0 ? 0.0 : -omega[i];
  return out;
}

}  // namespace

void FourierCoefficients::add(Frequency omega, Complex value) {
  if (static_cast<int>(omega.size()) != n_features_) {
    throw DimensionMismatch("frequency has " + std::to_string(omega.size()) +
                            " components, expected " + std::to_string(n_features_));
  }
  entries_[snapped(std::move(omega))] += value;
}

void FourierCoefficients::set(Frequency omega, Complex value) {
  if (static_cast<int>(omega.size()) != n_features_) {
    throw DimensionMismatch("frequency has wrong number of components");
  }
  entries_[snapped(std::move(omega))] = value;
}

Complex FourierCoefficients::at(const Frequency& omega) const {
  const auto it = entries_.find(omega);
  return it == entries_.end() ? Complex{} : it->second;
}

double FourierCoefficients::symmetry_defect() const {
  double defect = 0.0;
  for (const auto& [omega, c] : entries_) {
    defect = std::max(defect, std::abs(at(negated(omega)) - std::conj(c)));
  }
  return defect;
}

bool FourierCoefficients::is_conjugate_symmetric(double tol) const {
  for (const auto& [omega, c] : entries_) {
    if (std::abs(at(negated(omega)) - std::conj(c)) > tol * std::max(1.0, std::abs(c))) {
      return false;
    }
  }
  return true;
}

FourierCoefficients FourierCoefficients::cleaned(double tol) const {
  FourierCoefficients out(n_features_);
  for (const auto& [omega, c] : entries_) {
    const double re = std::abs(c.real()) < tol ? 0.0 : c.real();
    const double im = std::abs(c.imag()) < tol ? 0.0 : c.imag();
    out.entries_[omega] = std::abs(c) < tol ? Complex{} : Complex{re, im};
  }
  return out;
}

bool FourierCoefficients::is_integer() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) {
    return std::all_of(e.first.begin(), e.first.end(),
                       [](double w) { return w == std::round(w); });
  });
}

// -- Path amplitudes ------------------------------------------------------------

namespace {

// Eigenbasis of one encoding block on the full register. Path indices run
// over the d = 2^|E| eigenvectors of the block's generator on its qubits E;
// qubits outside E are spectators and ride along in the projectors.
struct LayerEigensystem {
  ComplexMatrix basis;                      // columns are joint eigenvectors
  std::vector<int> qubits;                  // E, local bit i on qubits[i]
  std::size_t dimension = 1;                // d
  std::vector<std::vector<double>> values;  // values[feature][local index]
};

LayerEigensystem layer_eigensystem(const EncodingSpec& spec, int n_qubits, int n_features) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  LayerEigensystem out;
  out.basis = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.qubits = encoding_qubits(spec);
  out.dimension = std::size_t{1} << out.qubits.size();
  out.values.assign(static_cast<std::size_t>(n_features), std::vector<double>(out.dimension, 0.0));
  for (const LocalGenerator& g : local_generators(spec)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g.generator);
    out.basis = embed(es.eigenvectors(), g.qubits, n_qubits) * out.basis;
    for (std::size_t j = 0; j < out.dimension; ++j) {
      std::size_t local = 0;
      for (std::size_t q = 0; q < g.qubits.size(); ++q) {
        const auto pos = static_cast<std::size_t>(
            std::find(out.qubits.begin(), out.qubits.end(), g.qubits[q]) - out.qubits.begin());
        local |= ((j >> pos) & 1U) << q;
      }
      out.values[g.feature][j] += es.eigenvalues()(static_cast<Eigen::Index>(local));
    }
  }
  return out;
}

// Local index on E of every full-register basis state.
std::vector<std::size_t> local_indices(const LayerEigensystem& eig, int n_qubits) {
  std::vector<std::size_t> out(std::size_t{1} << n_qubits, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t q = 0; q < eig.qubits.size(); ++q) out[i] |= ((i >> eig.qubits[q]) & 1U) << q;
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

}  // namespace

PathAmplitudeTable path_amplitudes(const CircuitModel& model, std::span<const double> params) {
  const int n = model.n_qubits();
  const int n_features = model.n_features();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  const auto layers = static_cast<std::size_t>(model.encoding_layers());

  std::vector<LayerEigensystem> eig;
  eig.reserve(layers);
  std::uint64_t pairs = 1;
  for (const Layer& layer : model.layers()) {
    eig.push_back(layer_eigensystem(layer.encoding, n, n_features));
    pairs *= checked_pow(eig.back().dimension, 2, kMaxPathPairs);
    if (pairs > kMaxPathPairs) {
      throw TooManyPaths("d^(2L) exceeds the cap of " + std::to_string(kMaxPathPairs) +
                         " path pairs (d = " + std::to_string(eig.back().dimension) +
                         ", L = " + std::to_string(layers) + ")");
    }
  }
  const std::vector<ComplexMatrix> w = model.trainable_unitaries(params);

  // Column p holds the component of the state that followed path p so far,
  // expressed in the current layer's eigenbasis. Path index p = sum_l j_l
  // d_1...d_{l-1}.
  ComplexMatrix paths(dim, 1);
  paths.col(0) = w[0].col(0);
  ComplexMatrix previous_basis = ComplexMatrix::Identity(dim, dim);
  std::vector<Frequency> sums(1, Frequency(n_features, 0.0));
  for (std::size_t l = 0; l < layers; ++l) {
    const ComplexMatrix transfer =
        l == 0 ? ComplexMatrix(eig[0].basis.adjoint())
               : ComplexMatrix(eig[l].basis.adjoint() * w[l] * previous_basis);
    const ComplexMatrix rotated = transfer * paths;
    const std::vector<std::size_t> local = local_indices(eig[l], n);
    const auto d = eig[l].dimension;
    const auto n_prev = static_cast<std::size_t>(paths.cols());
    ComplexMatrix next = ComplexMatrix::Zero(dim, static_cast<Eigen::Index>(n_prev * d));
    std::vector<Frequency> next_sums(n_prev * d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t p = 0; p < n_prev; ++p) {
        const auto col = static_cast<Eigen::Index>(p + j * n_prev);
        for (Eigen::Index i = 0; i < dim; ++i) {
          if (local[static_cast<std::size_t>(i)] == j) {
            next(i, col) = rotated(i, static_cast<Eigen::Index>(p));
          }
        }
        next_sums[p + j * n_prev] = sums[p];
        for (int f = 0; f < n_features; ++f) {
          next_sums[p + j * n_prev][f] += eig[l].values[f][j];
        }
      }
    }
    paths = std::move(next);
    sums = std::move(next_sums);
    previous_basis = eig[l].basis;
  }
  paths = w[layers] * previous_basis * paths;

  PathAmplitudeTable table;
  table.path_sums = std::move(sums);
  for (Frequency& s : table.path_sums) {
    for (double& v : s) v *= model.input_scale();
  }
  table.amplitudes = paths.adjoint() * model.observable() * paths;
  return table;
}

FourierCoefficients coefficients_exact(const CircuitModel& model,
                                       std::span<const double> params) {
  const PathAmplitudeTable table = path_amplitudes(model, params);
  FourierCoefficients out(model.n_features());
  const std::size_t n_paths = table.path_sums.size();
  Frequency omega(model.n_features());
  for (std::size_t k = 0; k < n_paths; ++k) {
    for (std::size_t j = 0; j < n_paths; ++j) {
      for (int f = 0; f < model.n_features(); ++f) {
        omega[f] = table.path_sums[k][f] - table.path_sums[j][f];
      }
      out.add(omega, table.amplitudes(static_cast<Eigen::Index>(k),
                                      static_cast<Eigen::Index>(j)));
    }
  }
  return out;
}

std::vector<FrequencySpectrum> model_spectra(const CircuitModel& model) {
  std::vector<std::vector<EncodingHamiltonian>> per_feature(model.n_features());
  for (const Layer& layer : model.layers()) {
    for (const LocalGenerator& g : local_generators(layer.encoding)) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g.generator, Eigen::EigenvaluesOnly);
      const Eigen::VectorXd& e = es.eigenvalues();
      per_feature[g.feature].emplace_back(std::vector<double>(e.data(), e.data() + e.size()));
    }
  }
  std::vector<FrequencySpectrum> out;
  for (const auto& gens : per_feature) {
    if (gens.empty()) {
      out.push_back(FrequencySpectrum::integer_range(0));
    } else {
      out.push_back(frequency_spectrum(gens).scaled(model.input_scale()));
    }
  }
  return out;
}

FourierCoefficients coefficients_dft(const CircuitModel& model, std::span<const double> params,
                                     std::span<const FrequencySpectrum> spectra) {
  const int n_features = model.n_features();
  if (spectra.empty() ||
      (spectra.size() != 1 && static_cast<int>(spectra.size()) != n_features)) {
    throw DimensionMismatch("need one spectrum per feature (or one shared)");
  }
  std::vector<std::vector<std::int64_t>> grids;
  std::vector<std::size_t> samples;
  for (int f = 0; f < n_features; ++f) {
    const FrequencySpectrum& s = spectra[spectra.size() == 1 ? 0 : f];
    auto ints = s.integers();
    if (!ints) {
      throw NonIntegerSpectrum("DFT extraction needs an integer spectrum; rescale first");
    }
    samples.push_back(2 * static_cast<std::size_t>(s.degree()) + 1);
    grids.push_back(std::move(*ints));
  }

  std::size_t total = 1;
  for (std::size_t t : samples) total *= t;
  std::vector<std::vector<double>> points(total, std::vector<double>(n_features));
  std::vector<double> values(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int f = 0; f < n_features; ++f) {
      const std::size_t t = rest % samples[f];
      rest /= samples[f];
      points[idx][f] = 2.0 * std::numbers::pi * static_cast<double>(t) /
                       static_cast<double>(samples[f]);
    }
    values[idx] = evaluate(model, params, points[idx]);
  }

  FourierCoefficients out(n_features);
  std::size_t n_freqs = 1;
  for (const auto& g : grids) n_freqs *= g.size();
  Frequency omega(n_features);
  for (std::size_t fi = 0; fi < n_freqs; ++fi) {
    std::size_t rest = fi;
    std::vector<std::int64_t> n_vec(n_features);
    for (int f = 0; f < n_features; ++f) {
      n_vec[f] = grids[f][rest % grids[f].size()];
      rest /= grids[f].size();
      omega[f] = static_cast<double>(n_vec[f]);
    }
    Complex acc{};
    for (std::size_t idx = 0; idx < total; ++idx) {
      // Phase reduced modulo T exactly in integers to keep the transform
      // accurate for large grids.
      double phase = 0.0;
      std::size_t r = idx;
      for (int f = 0; f < n_features; ++f) {
        const auto t = static_cast<std::int64_t>(r % samples[f]);
        r /= samples[f];
        const auto T = static_cast<std::int64_t>(samples[f]);
        const std::int64_t m = ((n_vec[f] * t) % T + T) % T;
        phase += 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(T);
      }
      acc += values[idx] * std::polar(1.0, -phase);
    }
    out.set(omega, acc / static_cast<double>(total));
  }
  return out;
}

FourierCoefficients coefficients_dft(const CircuitModel& model, std::span<const double> params) {
  const std::vector<FrequencySpectrum> spectra = model_spectra(model);
  return coefficients_dft(model, params, spectra);
}

FourierCoefficients coefficients_multivariate(const StateVector& gamma,
                                              const ComplexMatrix& observable,
                                              std::span<const EncodingHamiltonian> hamiltonians) {
  const std::size_t n_features = hamiltonians.size();
  if (n_features < 1 || n_features > 3) {
    throw DimensionMismatch("multivariate extraction supports 1 to 3 features");
  }
  std::size_t dim = 1;
  for (const auto& h : hamiltonians) dim *= static_cast<std::size_t>(h.dimension());
  if (dim > (std::size_t{1} << 12)) throw DimensionCap("total dimension exceeds 2^12");
  if (static_cast<std::size_t>(gamma.size()) != dim) {
    throw DimensionMismatch("state dimension " + std::to_string(gamma.size()) +
                            " does not match product of subsystem dimensions " +
                            std::to_string(dim));
  }
  if (static_cast<std::size_t>(observable.rows()) != dim ||
      static_cast<std::size_t>(observable.cols()) != dim) {
    throw DimensionMismatch("observable dimension does not match state");
  }
  std::vector<Frequency> lambda(dim, Frequency(n_features));
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t rest = i;
    for (std::size_t f = 0; f < n_features; ++f) {
      const auto df = static_cast<std::size_t>(hamiltonians[f].dimension());
      lambda[i][f] = hamiltonians[f].eigenvalues()[rest % df];
      rest /= df;
    }
  }
  FourierCoefficients out(static_cast<int>(n_features));
  Frequency omega(n_features);
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex gj = std::conj(gamma(static_cast<Eigen::Index>(j)));
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t f = 0; f < n_features; ++f) omega[f] = lambda[j][f] - lambda[k][f];
      out.add(omega, gj * gamma(static_cast<Eigen::Index>(k)) *
                         observable(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)));
    }
  }
  return out;
}

double eval_series(const FourierCoefficients& coeffs, std::span<const double> x) {
  if (static_cast<int>(x.size()) != coeffs.n_features()) {
    throw DimensionMismatch("input has " + std::to_string(x.size()) +
                            " components, series has " + std::to_string(coeffs.n_features()));
  }
  if (!coeffs.is_conjugate_symmetric()) {
    throw AsymmetricCoefficients("c_{-w} != conj(c_w); series is not real-valued");
  }
  Complex acc{};
  double scale = 1.0;
  for (const auto& [omega, c] : coeffs.entries()) {
    double phase = 0.0;
    for (std::size_t f = 0; f < x.size(); ++f) phase += omega[f] * x[f];
    acc += c * std::polar(1.0, phase);
    scale = std::max(scale, std::abs(c));
  }
  if (std::abs(acc.imag()) > 1e-10 * scale * static_cast<double>(coeffs.size())) {
    throw AsymmetricCoefficients("series has imaginary residue " + std::to_string(acc.imag()));
  }
  return acc.real();
}

double eval_series(const FourierCoefficients& coeffs, double x) {
  const double xs[] = {x};
  return eval_series(coeffs, xs);
}

double series_distance(const FourierCoefficients& a, const FourierCoefficients& b) {
  if (a.n_features() != b.n_features()) {
    throw GridMismatch("series have different numbers of features");
  }
  if (!a.is_integer() || !b.is_integer()) {
    throw GridMismatch("series distance needs integer frequency grids");
  }
  double sum = 0.0;
  for (const auto& [omega, c] : a.entries()) sum += std::norm(c - b.at(omega));
  for (const auto& [omega, c] : b.entries()) {
    if (a.entries().find(omega) == a.entries().end()) sum += std::norm(c);
  }
  return std::sqrt(sum);
}

}  // namespace fqml
