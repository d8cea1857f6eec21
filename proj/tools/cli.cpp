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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqml/errors.hpp"
#include "fqml/fourier.hpp"
#include "fqml/model_io.hpp"
#include "fqml/sampling.hpp"
#include "fqml/spectra.hpp"
#include "fqml/training.hpp"
#include "fqml/universal.hpp"

namespace fqml::cli {

namespace {

using nlohmann::json;

struct SpectrumArgs {
  std::string eigenvalues;
  int layers = 1;
  std::optional<int> parallel;
  std::optional<int> sequential;
  bool rescale = false;
};

struct CoeffsArgs {
  std::string model;
  std::string method = "exact";
  std::string params;
};

struct FitArgs {
  std::string model;
  std::string target;
  double learning_rate = 0.3;
  int steps = 200;
  int batch = 25;
  int restarts = 3;
  int points = 25;
  std::optional<std::uint64_t> seed;
  std::string gradient = "parameter-shift";
  std::optional<double> input_scale;
  std::string loss_out = "loss.csv";
  std::string params_out = "params.json";
};

struct UniversalArgs {
  std::string target;
  std::string out_dir = ".";
  int points = 100;
  std::uint64_t seed = 0;
};

struct SampleArgs {
  std::string circuit = "A";
  int sublayers = 1;
  int qubits = 5;
  int samples = 100;
  std::optional<std::uint64_t> seed;
  int n_coeffs = 6;
  std::string stats_out;
};

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (!(is >> v) || !(is >> std::ws).eof()) {
      throw InvalidArgument("cannot parse number \"" + item + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty eigenvalue list");
  return out;
}

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  const int modes = (!a.eigenvalues.empty()) + a.parallel.has_value() + a.sequential.has_value();
  if (modes != 1) {
    err << "spectrum: give exactly one of --eigenvalues, --pauli-parallel, --pauli-sequential\n";
    return kBadArguments;
  }
  std::optional<FrequencySpectrum> spectrum;
  std::uint64_t bound = 0;
  try {
    if (!a.eigenvalues.empty()) {
      if (a.layers < 1) throw InvalidArgument("--layers must be >= 1");
      const EncodingHamiltonian h(parse_number_list(a.eigenvalues));
      spectrum = frequency_spectrum(h, a.layers);
      bound = spectrum_size_bound(static_cast<std::uint64_t>(h.dimension()),
                                  static_cast<std::uint64_t>(a.layers));
    } else if (a.parallel) {
      if (*a.parallel < 1 || *a.parallel > 20) throw InvalidArgument("r must be in 1..20");
      spectrum = parallel_pauli_spectrum(*a.parallel);
      bound = spectrum_size_bound(std::uint64_t{1} << *a.parallel, 1);
    } else {
      if (*a.sequential < 1 || *a.sequential > 20) throw InvalidArgument("r must be in 1..20");
      spectrum = sequential_pauli_spectrum(*a.sequential);
      bound = spectrum_size_bound(2, static_cast<std::uint64_t>(*a.sequential));
    }
  } catch (const Error& e) {
    err << "spectrum: " << e.what() << "\n";
    return kBadArguments;
  }
  json doc;
  doc["omega"] = std::vector<double>(spectrum->frequencies().begin(), spectrum->frequencies().end());
  doc["K"] = spectrum->size();
  doc["D"] = spectrum->degree();
  doc["bound"] = bound;
  if (a.rescale) {
    try {
      const RescaledSpectrum r = rescale_to_integer(*spectrum);
      doc["omega0"] = r.base_frequency;
      doc["integer_omega"] = *r.integer_spectrum.integers();
    } catch (const IncommensurableError& e) {
      err << "spectrum: " << e.what() << "\n";
      return kIncommensurable;
    }
  }
  out << doc.dump() << "\n";
  return kOk;
}

int cmd_coeffs(const CoeffsArgs& a, std::ostream& out, std::ostream& err) {
  try {
    ModelDocument doc = parse_model(read_text_file(a.model));
    std::vector<double> params;
    if (!a.params.empty()) {
      params = parse_params(read_text_file(a.params));
    } else if (doc.params) {
      params = *doc.params;
    }
    if (static_cast<int>(params.size()) != doc.model.parameter_count()) {
      err << "coeffs: model expects " << doc.model.parameter_count() << " parameters, got "
          << params.size() << "\n";
      return kBadArguments;
    }
    FourierCoefficients coeffs = a.method == "dft" ? coefficients_dft(doc.model, params)
                                                   : coefficients_exact(doc.model, params);
    write_coefficients_csv(out, coeffs);
    return kOk;
  } catch (const ParseError& e) {
    err << "coeffs: parse error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const TooManyPaths& e) {
    err << "coeffs: " << e.what() << "\n";
    return kTooManyPaths;
  } catch (const DimensionCap& e) {
    err << "coeffs: " << e.what() << "\n";
    return kDimensionCap;
  } catch (const Error& e) {
    err << "coeffs: " << e.what() << "\n";
    return kSetupError;
  }
}

int cmd_fit(const FitArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.seed) {
    err << "fit: --seed is required\n";
    return kBadArguments;
  }
  std::optional<ModelDocument> doc;
  std::optional<TargetSeries> target;
  try {
    doc = parse_model(read_text_file(a.model));
    target = parse_target(read_text_file(a.target));
  } catch (const ParseError& e) {
    err << "fit: parse error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const DimensionCap& e) {
    err << "fit: " << e.what() << "\n";
    return kDimensionCap;
  }
  try {
    const CircuitModel model =
        a.input_scale ? doc->model.with_input_scale(*a.input_scale) : doc->model;
    TrainConfig config;
    config.learning_rate = a.learning_rate;
    config.max_steps = a.steps;
    config.batch_size = a.batch;
    config.restarts = a.restarts;
    config.seed = *a.seed;
    if (a.gradient == "parameter-shift") {
      config.gradient = GradientMethod::parameter_shift;
    } else if (a.gradient == "central-difference") {
      config.gradient = GradientMethod::central_difference;
    } else {
      err << "fit: unknown gradient method " << a.gradient << "\n";
      return kBadArguments;
    }
    const FitResult result = fit(model, *target, config, a.points);
    {
      std::ofstream loss(a.loss_out, std::ios::binary);
      if (!loss) throw InvalidArgument("cannot write " + a.loss_out);
      write_loss_csv(loss, result.best);
    }
    {
      std::ofstream params(a.params_out, std::ios::binary);
      if (!params) throw InvalidArgument("cannot write " + a.params_out);
      params << params_to_json(result.best.params);
    }
    out << "final_mse " << format_double(result.report.final_mse) << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "fit: " << e.what() << "\n";
    return kSetupError;
  }
}

int cmd_universal(const UniversalArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<TargetSeries> target;
  try {
    target = parse_target(read_text_file(a.target));
  } catch (const ParseError& e) {
    err << "universal: parse error: " << e.what() << "\n";
    return kBadArguments;
  }
  try {
    const UniversalModel built = build_universal_model(*target);
    const double max_error = verify_universal(built, *target, a.points, a.seed);
    const std::filesystem::path dir(a.out_dir);
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
      std::ofstream f(dir / name, std::ios::binary);
      if (!f) throw InvalidArgument("cannot write " + (dir / name).string());
      f << text;
    };
    write("gamma.json", state_to_json(built.gamma));
    write("observable.json", matrix_to_json(built.observable));
    write("model.json", model_to_json(built.model));
    const bool passed = max_error <= 1e-8;
    json report = {{"qubits_per_feature", built.qubits_per_feature},
                   {"n_qubits", built.model.n_qubits()},
                   {"max_error", max_error},
                   {"points", a.points},
                   {"passed", passed}};
    out << report.dump() << "\n";
    return passed ? kOk : kVerificationFailed;
  } catch (const DimensionCap& e) {
    err << "universal: " << e.what() << "\n";
    return kDimensionCap;
  } catch (const Error& e) {
    err << "universal: " << e.what() << "\n";
    return kSetupError;
  }
}

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.seed) {
    err << "sample-coeffs: --seed is required\n";
    return kBadArguments;
  }
  if ((a.circuit != "A" && a.circuit != "B") || a.sublayers < 1 || a.qubits < 1 ||
      a.samples < 1 || a.n_coeffs < 1) {
    err << "sample-coeffs: invalid arguments\n";
    return kBadArguments;
  }
  try {
    SamplingConfig config;
    config.ansatz = Ansatz{a.sublayers, a.circuit == "A" ? AnsatzKind::A : AnsatzKind::B};
    config.repetitions = a.qubits;
    config.n_samples = a.samples;
    config.seed = *a.seed;
    config.n_reported = a.n_coeffs;
    const auto samples = sample_coefficients(config);
    write_samples_csv(out, samples, a.n_coeffs);
    if (!a.stats_out.empty()) {
      std::ofstream f(a.stats_out, std::ios::binary);
      if (!f) throw InvalidArgument("cannot write " + a.stats_out);
      write_stats_csv(f, coefficient_stats(samples, a.n_coeffs));
    }
    return kOk;
  } catch (const DimensionCap& e) {
    err << "sample-coeffs: " << e.what() << "\n";
    return kDimensionCap;
  } catch (const Error& e) {
    err << "sample-coeffs: " << e.what() << "\n";
    return kSetupError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum models as partial Fourier series", "fqml"};
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Frequency spectrum of an encoding");
  spectrum->add_option("--eigenvalues", spectrum_args.eigenvalues,
                       "Comma-separated generator eigenvalues");
  spectrum->add_option("--layers", spectrum_args.layers, "Number of encoding repetitions");
  spectrum->add_option("--pauli-parallel", spectrum_args.parallel, "r parallel Pauli rotations");
  spectrum->add_option("--pauli-sequential", spectrum_args.sequential,
                       "r sequential Pauli rotations");
  spectrum->add_flag("--rescale", spectrum_args.rescale, "Rescale to an integer spectrum");

  CoeffsArgs coeffs_args;
  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients of a model");
  coeffs->add_option("model", coeffs_args.model, "Model JSON")->required();
  coeffs->add_option("--method", coeffs_args.method, "exact | dft")
      ->check(CLI::IsMember({"exact", "dft"}));
  coeffs->add_option("--params", coeffs_args.params, "Parameter JSON file");

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a model to a target series");
  fit_cmd->add_option("model", fit_args.model, "Model JSON")->required();
  fit_cmd->add_option("target", fit_args.target, "Target series JSON")->required();
  fit_cmd->add_option("--lr", fit_args.learning_rate, "Adam learning rate");
  fit_cmd->add_option("--steps", fit_args.steps, "Maximum optimiser steps");
  fit_cmd->add_option("--batch", fit_args.batch, "Batch size");
  fit_cmd->add_option("--restarts", fit_args.restarts, "Independent restarts");
  fit_cmd->add_option("--points", fit_args.points, "Equidistant samples per feature");
  fit_cmd->add_option("--seed", fit_args.seed, "Base RNG seed");
  fit_cmd->add_option("--gradient", fit_args.gradient, "parameter-shift | central-difference");
  fit_cmd->add_option("--input-scale", fit_args.input_scale, "Override the model's input scale");
  fit_cmd->add_option("--loss-out", fit_args.loss_out, "Loss history CSV path");
  fit_cmd->add_option("--params-out", fit_args.params_out, "Best parameters JSON path");

  UniversalArgs universal_args;
  auto* universal = app.add_subcommand("universal", "Build a model realising a target series");
  universal->add_option("target", universal_args.target, "Target series JSON")->required();
  universal->add_option("--out-dir", universal_args.out_dir, "Directory for artifacts");
  universal->add_option("--points", universal_args.points, "Verification points");
  universal->add_option("--seed", universal_args.seed, "Verification RNG seed");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample-coeffs", "Coefficients of random models");
  sample->add_option("--circuit", sample_args.circuit, "Ansatz A or B");
  sample->add_option("--sublayers", sample_args.sublayers, "Ansatz repetitions");
  sample->add_option("--qubits", sample_args.qubits, "Parallel encodings (qubits)");
  sample->add_option("--samples", sample_args.samples, "Number of random models");
  sample->add_option("--seed", sample_args.seed, "Base RNG seed");
  sample->add_option("--n-coeffs", sample_args.n_coeffs, "Report c_0 .. c_{n-1}");
  sample->add_option("--stats-out", sample_args.stats_out, "Per-frequency statistics CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadArguments;
  }

  if (spectrum->parsed()) return cmd_spectrum(spectrum_args, out, err);
  if (coeffs->parsed()) return cmd_coeffs(coeffs_args, out, err);
  if (fit_cmd->parsed()) return cmd_fit(fit_args, out, err);
  if (universal->parsed()) return cmd_universal(universal_args, out, err);
  if (sample->parsed()) return cmd_sample(sample_args, out, err);
  return kBadArguments;
}

}  // namespace fqml::cli
