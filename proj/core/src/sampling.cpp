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

#include "fqml/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <locale>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "fqml/errors.hpp"

namespace fqml {

CircuitModel parallel_encoding_model(const Ansatz& ansatz, int repetitions) {
  if (repetitions < 1) throw InvalidArgument("need at least one encoding repetition");
  ParallelPauliEncoding encoding{PauliAxis::X, {}, {}};
  for (int q = 0; q < repetitions; ++q) encoding.qubits.push_back(q);
  const int qubit0[] = {0};
  const ComplexMatrix z0 = embed(pauli_matrix(PauliAxis::Z), qubit0, repetitions);
  return CircuitModel(repetitions, 1, {Layer{ansatz, std::move(encoding)}}, ansatz, z0);
}

std::vector<CoefficientSample> sample_coefficients(const SamplingConfig& config) {
  return sample_coefficients(config, [&](std::size_t index, int count) {
    std::mt19937_64 rng(config.seed + index);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<double> p(static_cast<std::size_t>(count));
    for (double& v : p) v = angle(rng);
    return p;
  });
}

std::vector<CoefficientSample> sample_coefficients(const SamplingConfig& config,
                                                   const ParameterSource& source) {
  if (config.n_samples < 1) throw InvalidArgument("need at least one sample");
  const CircuitModel model = parallel_encoding_model(config.ansatz, config.repetitions);
  const std::vector<FrequencySpectrum> spectra{FrequencySpectrum::integer_range(config.repetitions)};
  std::vector<CoefficientSample> out;
  out.reserve(static_cast<std::size_t>(config.n_samples));
  for (int s = 0; s < config.n_samples; ++s) {
    const auto index = static_cast<std::size_t>(s);
    const std::vector<double> params = source(index, model.parameter_count());
    out.push_back({config.ansatz.kind, config.ansatz.sublayers, config.repetitions,
                   config.seed + index, coefficients_dft(model, params, spectra)});
  }
  return out;
}

std::vector<FrequencyStats> coefficient_stats(const std::vector<CoefficientSample>& samples,
                                              int n_reported) {
  if (samples.empty()) throw EmptySamples("no samples to summarise");
  std::vector<FrequencyStats> out;
  const double count = static_cast<double>(samples.size());
  for (int n = 0; n < n_reported; ++n) {
    FrequencyStats st;
    st.frequency = n;
    for (const auto& s : samples) st.mean += s.coefficients.at(static_cast<double>(n));
    st.mean /= count;
    for (const auto& s : samples) {
      const Complex c = s.coefficients.at(static_cast<double>(n));
      st.variance_re += (c.real() - st.mean.real()) * (c.real() - st.mean.real());
      st.variance_im += (c.imag() - st.mean.imag()) * (c.imag() - st.mean.imag());
      st.max_abs = std::max(st.max_abs, std::abs(c));
    }
    st.variance_re /= count;
    st.variance_im /= count;
    st.structural_zero = st.max_abs < kStructuralZero;
    out.push_back(st);
  }
  return out;
}

namespace {

std::ostringstream csv_stream() {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf.precision(17);
  return buf;
}

double report_value(double v) { return std::abs(v) < kZeroCoefficient ? 0.0 : v; }

}  // namespace

void write_samples_csv(std::ostream& out, const std::vector<CoefficientSample>& samples,
                       int n_reported) {
  auto buf = csv_stream();
  buf << "sample_index,freq,re,im\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (int n = 0; n < n_reported; ++n) {
      const Complex c = samples[i].coefficients.at(static_cast<double>(n));
      buf << i << ',' << n << ',' << report_value(c.real()) << ',' << report_value(c.imag())
          << '\n';
    }
  }
  out << buf.str();
}

void write_stats_csv(std::ostream& out, const std::vector<FrequencyStats>& stats) {
  auto buf = csv_stream();
  buf << "freq,mean_re,mean_im,var_re,var_im,max_abs,structural_zero\n";
  for (const auto& s : stats) {
    buf << s.frequency << ',' << report_value(s.mean.real()) << ','
        << report_value(s.mean.imag()) << ',' << s.variance_re << ',' << s.variance_im << ','
        << s.max_abs << ',' << (s.structural_zero ? 1 : 0) << '\n';
  }
  out << buf.str();
}

}  // namespace fqml
