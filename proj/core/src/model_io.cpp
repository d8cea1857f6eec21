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

#include "fqml/model_io.hpp"

#include <cmath>
#include <fstream>
#include <locale>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fqml/errors.hpp"

namespace fqml {

using nlohmann::json;

namespace {

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& require(const json& obj, const std::string& path, std::string_view key) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError(child(path, key), "missing required key");
  return *it;
}

int get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<int>();
}

double get_double(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(path, "expected a finite number");
  return d;
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a string");
  return v.get<std::string>();
}

const json& get_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  return v;
}

std::vector<int> get_int_list(const json& v, const std::string& path) {
  std::vector<int> out;
  const json& arr = get_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_int(arr[i], child(path, i)));
  return out;
}

std::vector<double> get_double_list(const json& v, const std::string& path) {
  std::vector<double> out;
  const json& arr = get_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_double(arr[i], child(path, i)));
  return out;
}

Complex get_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw ParseError(path, "expected a [re, im] pair");
  return {get_double(v[0], child(path, 0)), get_double(v[1], child(path, 1))};
}

ComplexMatrix get_matrix(const json& v, const std::string& path, Eigen::Index dim) {
  const json& arr = get_array(v, path);
  if (static_cast<Eigen::Index>(arr.size()) != dim * dim) {
    throw ParseError(path, "expected " + std::to_string(dim * dim) +
                               " row-major [re, im] entries, got " + std::to_string(arr.size()));
  }
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto i = static_cast<std::size_t>(r * dim + c);
      m(r, c) = get_complex(arr[i], child(path, i));
    }
  }
  return m;
}

PauliAxis get_axis(const json& v, const std::string& path) {
  const std::string s = get_string(v, path);
  if (s == "X" || s == "x") return PauliAxis::X;
  if (s == "Y" || s == "y") return PauliAxis::Y;
  if (s == "Z" || s == "z") return PauliAxis::Z;
  throw ParseError(path, "axis must be one of X, Y, Z");
}

TrainableBlock parse_trainable(const json& v, const std::string& path, int n_qubits) {
  const std::string kind = get_string(require(v, path, "kind"), child(path, "kind"));
  if (kind == "fixed") {
    ComplexMatrix m = get_matrix(require(v, path, "entries"), child(path, "entries"),
                                 Eigen::Index{1} << n_qubits);
    if (!is_unitary(m)) throw ParseError(child(path, "entries"), "matrix is not unitary");
    return FixedUnitary{std::move(m)};
  }
  if (kind == "ansatz") {
    const std::string circuit = get_string(require(v, path, "circuit"), child(path, "circuit"));
    Ansatz a;
    if (circuit == "A") {
      a.kind = AnsatzKind::A;
    } else if (circuit == "B") {
      a.kind = AnsatzKind::B;
    } else {
      throw ParseError(child(path, "circuit"), "circuit must be \"A\" or \"B\"");
    }
    a.sublayers = get_int(require(v, path, "sublayers"), child(path, "sublayers"));
    if (a.sublayers < 1) throw ParseError(child(path, "sublayers"), "must be >= 1");
    return a;
  }
  throw ParseError(child(path, "kind"), "unknown trainable kind \"" + kind + "\"");
}

EncodingSpec parse_encoding(const json& v, const std::string& path) {
  const std::string kind = get_string(require(v, path, "kind"), child(path, "kind"));
  if (kind == "pauli") {
    PauliRotationEncoding e;
    e.axis = get_axis(require(v, path, "axis"), child(path, "axis"));
    e.qubit = get_int(require(v, path, "qubit"), child(path, "qubit"));
    if (v.contains("feature")) e.feature = get_int(v["feature"], child(path, "feature"));
    return e;
  }
  if (kind == "parallel_pauli") {
    ParallelPauliEncoding e;
    e.axis = get_axis(require(v, path, "axis"), child(path, "axis"));
    e.qubits = get_int_list(require(v, path, "qubits"), child(path, "qubits"));
    if (v.contains("features")) {
      e.features = get_int_list(v["features"], child(path, "features"));
      if (e.features.size() != e.qubits.size()) {
        throw ParseError(child(path, "features"), "must have one entry per qubit");
      }
    }
    return e;
  }
  if (kind == "diagonal") {
    DiagonalEncoding e;
    const std::string bpath = child(path, "blocks");
    const json& blocks = get_array(require(v, path, "blocks"), bpath);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string p = child(bpath, i);
      const int feature =
          blocks[i].contains("feature") ? get_int(blocks[i]["feature"], child(p, "feature")) : 0;
      std::vector<int> qubits = get_int_list(require(blocks[i], p, "qubits"), child(p, "qubits"));
      std::vector<double> eig =
          get_double_list(require(blocks[i], p, "eigenvalues"), child(p, "eigenvalues"));
      if (qubits.empty() || qubits.size() > 30 || eig.size() != (std::size_t{1} << qubits.size())) {
        throw ParseError(child(p, "eigenvalues"), "need 2^q eigenvalues for q qubits");
      }
      e.blocks.push_back({feature, std::move(qubits), EncodingHamiltonian(std::move(eig))});
    }
    return e;
  }
  throw ParseError(child(path, "kind"), "unknown encoding kind \"" + kind + "\"");
}

ComplexMatrix parse_observable(const json& v, const std::string& path, int n_qubits) {
  const std::string kind = get_string(require(v, path, "kind"), child(path, "kind"));
  if (kind == "pauli_z") {
    const int q = get_int(require(v, path, "qubit"), child(path, "qubit"));
    if (q < 0 || q >= n_qubits) throw ParseError(child(path, "qubit"), "qubit out of range");
    const int target[] = {q};
    return embed(pauli_matrix(PauliAxis::Z), target, n_qubits);
  }
  if (kind == "dense") {
    ComplexMatrix m =
        get_matrix(require(v, path, "entries"), child(path, "entries"), Eigen::Index{1} << n_qubits);
    if (!is_hermitian(m)) throw ParseError(child(path, "entries"), "observable is not Hermitian");
    return m;
  }
  throw ParseError(child(path, "kind"), "unknown observable kind \"" + kind + "\"");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

ModelDocument parse_model(std::string_view json_text) {
  const json doc = parse_json(json_text);
  const std::string root;
  if (!doc.is_object()) throw ParseError(root, "model document must be an object");
  const int n_qubits = get_int(require(doc, root, "n_qubits"), "/n_qubits");
  if (n_qubits < 1) throw ParseError("/n_qubits", "must be >= 1");
  if (n_qubits > max_qubits()) {
    throw DimensionCap("model uses " + std::to_string(n_qubits) + " qubits, cap is " +
                       std::to_string(max_qubits()));
  }
  const int n_features = doc.contains("n_features") ? get_int(doc["n_features"], "/n_features") : 1;
  if (n_features < 1) throw ParseError("/n_features", "must be >= 1");
  const double scale =
      doc.contains("input_scale") ? get_double(doc["input_scale"], "/input_scale") : 1.0;
  if (!(scale > 0.0)) throw ParseError("/input_scale", "must be positive");

  std::vector<Layer> layers;
  const json& jl = get_array(require(doc, root, "layers"), "/layers");
  if (jl.empty()) throw ParseError("/layers", "need at least one layer");
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const std::string p = child("/layers", i);
    layers.push_back({parse_trainable(require(jl[i], p, "trainable"), child(p, "trainable"), n_qubits),
                      parse_encoding(require(jl[i], p, "encoding"), child(p, "encoding"))});
  }
  TrainableBlock final_block =
      parse_trainable(require(doc, root, "final_trainable"), "/final_trainable", n_qubits);
  ComplexMatrix observable =
      parse_observable(require(doc, root, "observable"), "/observable", n_qubits);

  std::optional<std::vector<double>> params;
  if (doc.contains("params")) params = get_double_list(doc["params"], "/params");

  try {
    CircuitModel model(n_qubits, n_features, std::move(layers), std::move(final_block),
                       std::move(observable), scale);
    if (params && static_cast<int>(params->size()) != model.parameter_count()) {
      throw ParseError("/params", "expected " + std::to_string(model.parameter_count()) +
                                      " parameters, got " + std::to_string(params->size()));
    }
    return {std::move(model), std::move(params)};
  } catch (const DimensionCap&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("/layers", e.what());
  }
}

TargetSeries parse_target(std::string_view json_text) {
  const json doc = parse_json(json_text);
  const std::string root;
  if (!doc.is_object()) throw ParseError(root, "target document must be an object");
  const int n_features = doc.contains("n_features") ? get_int(doc["n_features"], "/n_features") : 1;
  if (n_features < 1) throw ParseError("/n_features", "must be >= 1");
  const int degree = get_int(require(doc, root, "degree"), "/degree");
  if (degree < 0) throw ParseError("/degree", "must be >= 0");
  FourierCoefficients coeffs(n_features);
  const json& list = get_array(require(doc, root, "coefficients"), "/coefficients");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = child("/coefficients", i);
    const json& n_json = require(list[i], p, "n");
    Frequency n;
    if (n_json.is_number_integer()) {
      n.push_back(get_int(n_json, child(p, "n")));
    } else {
      for (int v : get_int_list(n_json, child(p, "n"))) n.push_back(v);
    }
    if (static_cast<int>(n.size()) != n_features) {
      throw ParseError(child(p, "n"), "frequency must have " + std::to_string(n_features) +
                                          " components");
    }
    for (double v : n) {
      if (std::abs(v) > degree) throw ParseError(child(p, "n"), "frequency exceeds degree");
    }
    if (coeffs.entries().count(n)) throw ParseError(child(p, "n"), "duplicate frequency");
    coeffs.set(n, get_complex(require(list[i], p, "c"), child(p, "c")));
  }
  try {
    return TargetSeries(n_features, degree, coeffs);
  } catch (const Error& e) {
    throw ParseError("/coefficients", e.what());
  }
}

std::vector<double> parse_params(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (doc.is_object()) return get_double_list(require(doc, "", "params"), "/params");
  return get_double_list(doc, "");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json entries_json(const ComplexMatrix& m) {
  json arr = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) arr.push_back(complex_json(m(r, c)));
  }
  return arr;
}

std::string axis_name(PauliAxis a) {
  switch (a) {
    case PauliAxis::X:
      return "X";
    case PauliAxis::Y:
      return "Y";
    case PauliAxis::Z:
      return "Z";
  }
  return "X";
}

json trainable_json(const TrainableBlock& block) {
  if (const auto* fixed = std::get_if<FixedUnitary>(&block)) {
    return {{"kind", "fixed"}, {"entries", entries_json(fixed->matrix)}};
  }
  const auto& a = std::get<Ansatz>(block);
  return {{"kind", "ansatz"},
          {"circuit", a.kind == AnsatzKind::A ? "A" : "B"},
          {"sublayers", a.sublayers}};
}

json encoding_json(const EncodingSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PauliRotationEncoding>) {
          return {{"kind", "pauli"}, {"axis", axis_name(s.axis)}, {"qubit", s.qubit},
                  {"feature", s.feature}};
        } else if constexpr (std::is_same_v<T, ParallelPauliEncoding>) {
          json j = {{"kind", "parallel_pauli"}, {"axis", axis_name(s.axis)}, {"qubits", s.qubits}};
          if (!s.features.empty()) j["features"] = s.features;
          return j;
        } else {
          json blocks = json::array();
          for (const auto& b : s.blocks) {
            const auto eig = b.hamiltonian.eigenvalues();
            blocks.push_back({{"feature", b.feature},
                              {"qubits", b.qubits},
                              {"eigenvalues", std::vector<double>(eig.begin(), eig.end())}});
          }
          return {{"kind", "diagonal"}, {"blocks", blocks}};
        }
      },
      spec);
}

}  // namespace

std::string model_to_json(const CircuitModel& model, std::span<const double> params) {
  json doc;
  doc["n_qubits"] = model.n_qubits();
  doc["n_features"] = model.n_features();
  doc["input_scale"] = model.input_scale();
  json layers = json::array();
  for (const Layer& l : model.layers()) {
    layers.push_back({{"trainable", trainable_json(l.trainable)},
                      {"encoding", encoding_json(l.encoding)}});
  }
  doc["layers"] = layers;
  doc["final_trainable"] = trainable_json(model.final_trainable());
  doc["observable"] = {{"kind", "dense"}, {"entries", entries_json(model.observable())}};
  if (!params.empty()) doc["params"] = std::vector<double>(params.begin(), params.end());
  return doc.dump(2) + "\n";
}

std::string target_to_json(const TargetSeries& target) {
  json list = json::array();
  for (const auto& [n, c] : target.coefficients().entries()) {
    std::vector<int> ni;
    for (double v : n) ni.push_back(static_cast<int>(v));
    list.push_back({{"n", ni}, {"c", complex_json(c)}});
  }
  json doc = {{"n_features", target.n_features()}, {"degree", target.degree()},
              {"coefficients", list}};
  return doc.dump(2) + "\n";
}

std::string state_to_json(const StateVector& state) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < state.size(); ++i) arr.push_back(complex_json(state(i)));
  return json({{"dimension", state.size()}, {"amplitudes", arr}}).dump(2) + "\n";
}

std::string matrix_to_json(const ComplexMatrix& matrix) {
  return json({{"rows", matrix.rows()}, {"cols", matrix.cols()}, {"entries", entries_json(matrix)}})
             .dump(2) +
         "\n";
}

std::string params_to_json(std::span<const double> params) {
  return json({{"params", std::vector<double>(params.begin(), params.end())}}).dump(2) + "\n";
}

std::string format_double(double v) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf.precision(17);
  buf << v;
  return buf.str();
}

void write_coefficients_csv(std::ostream& out, const FourierCoefficients& coeffs) {
  const FourierCoefficients clean = coeffs.cleaned();
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf.precision(17);
  buf << "freq,re,im\n";
  for (const auto& [omega, c] : clean.entries()) {
    for (std::size_t f = 0; f < omega.size(); ++f) {
      if (f) buf << ';';
      buf << omega[f];
    }
    buf << ',' << c.real() << ',' << c.imag() << '\n';
  }
  out << buf.str();
}

}  // namespace fqml
