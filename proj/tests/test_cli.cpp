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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fqml/model_io.hpp"
#include "support.hpp"

namespace fqml {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result fqml(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Data rows of a CSV document, header dropped.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fqml_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) { return read_text_file(p); }

  fs::path dir_;
};

const char* kRxModel = R"({
  "n_qubits": 1, "n_features": 1,
  "layers": [{"trainable": {"kind": "fixed", "entries": [[1,0],[0,0],[0,0],[1,0]]},
              "encoding": {"kind": "pauli", "axis": "X", "qubit": 0, "feature": 0}}],
  "final_trainable": {"kind": "fixed", "entries": [[1,0],[0,0],[0,0],[1,0]]},
  "observable": {"kind": "pauli_z", "qubit": 0}
})";

const char* kRotModel = R"({
  "n_qubits": 1, "n_features": 1,
  "layers": [{"trainable": {"kind": "ansatz", "circuit": "A", "sublayers": 1},
              "encoding": {"kind": "pauli", "axis": "X", "qubit": 0, "feature": 0}}],
  "final_trainable": {"kind": "ansatz", "circuit": "A", "sublayers": 1},
  "observable": {"kind": "pauli_z", "qubit": 0}
})";

const char* kDegree1Target =
    R"({"n_features": 1, "degree": 1, "coefficients": [{"n": 0, "c": [0.1, 0]}, {"n": 1, "c": [0.15, -0.15]}]})";

TEST_F(Cli, SpectrumExamples) {
  auto r = fqml({"spectrum", "--pauli-parallel", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"D\":3.0,\"K\":3,\"bound\":31,\"omega\":[-3.0,-2.0,-1.0,0.0,1.0,2.0,3.0]}\n");
  r = fqml({"spectrum", "--eigenvalues", "-1,1", "--layers", "1"});
  EXPECT_EQ(r.out, "{\"D\":2.0,\"K\":1,\"bound\":1,\"omega\":[-2.0,0.0,2.0]}\n");
  r = fqml({"spectrum", "--eigenvalues", "0,1,4", "--layers", "1"});
  EXPECT_EQ(r.out, "{\"D\":4.0,\"K\":3,\"bound\":3,\"omega\":[-4.0,-3.0,-1.0,0.0,1.0,3.0,4.0]}\n");
  r = fqml({"spectrum", "--pauli-sequential", "2"});
  EXPECT_EQ(r.out, "{\"D\":2.0,\"K\":2,\"bound\":7,\"omega\":[-2.0,-1.0,0.0,1.0,2.0]}\n");
}

TEST_F(Cli, SpectrumRescale) {
  auto r = fqml({"spectrum", "--eigenvalues", "0,0.5,1.5", "--layers", "1", "--rescale"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"omega0\":0.5"), std::string::npos);
  EXPECT_NE(r.out.find("\"integer_omega\":[-3,-2,-1,0,1,2,3]"), std::string::npos);
  r = fqml({"spectrum", "--eigenvalues", "0,1,3.141592653589793", "--rescale"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, SpectrumBadArguments) {
  EXPECT_EQ(fqml({"spectrum"}).code, 2);
  EXPECT_EQ(fqml({"spectrum", "--eigenvalues", "1,x"}).code, 2);
  EXPECT_EQ(fqml({"spectrum", "--pauli-parallel", "2", "--pauli-sequential", "2"}).code, 2);
  EXPECT_EQ(fqml({"spectrum", "--eigenvalues", "1", "--layers", "0"}).code, 2);
  EXPECT_EQ(fqml({"spectrum", "--bogus"}).code, 2);
  EXPECT_EQ(fqml({"nonsense"}).code, 2);
  EXPECT_EQ(fqml({}).code, 2);
  EXPECT_EQ(fqml({"--help"}).code, 0);
}

TEST_F(Cli, CoeffsExactAndDft) {
  const std::string model = write("rx.json", kRxModel);
  for (const char* method : {"exact", "dft"}) {
    const auto r = fqml({"coeffs", model, "--method", method});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 3U) << method;
    const double want[3] = {0.5, 0.0, 0.5};
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(std::stoi(rows[i][0]), i - 1);
      EXPECT_NEAR(std::stod(rows[i][1]), want[i], 1e-14);
      EXPECT_EQ(rows[i][2], "0");
    }
  }
}

TEST_F(Cli, CoeffsParamsAndErrors) {
  const std::string model = write("rot.json", kRotModel);
  EXPECT_EQ(fqml({"coeffs", model}).code, 2);  // no parameters supplied
  const std::string params = write("p.json", "[0.1, 0.2, 0.3, 0.4, 0.5, 0.6]");
  const auto exact = fqml({"coeffs", model, "--params", params});
  const auto dft = fqml({"coeffs", model, "--params", params, "--method", "dft"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_EQ(dft.code, 0);
  EXPECT_EQ(std::count(exact.out.begin(), exact.out.end(), '\n'), 4);

  const auto bad = fqml({"coeffs", write("bad.json", R"({"n_qubits": "x"})")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("/n_qubits"), std::string::npos);
  EXPECT_EQ(fqml({"coeffs", path("missing.json")}).code, 2);
  EXPECT_EQ(fqml({"coeffs", model, "--method", "magic"}).code, 2);

  std::mt19937_64 rng(1);
  const auto big = testing::random_diagonal_model(4, 3, 0, rng);
  EXPECT_EQ(fqml({"coeffs", write("big.json", model_to_json(big.model))}).code, 4);
}

TEST_F(Cli, FitWritesArtifacts) {
  const std::string model = write("rot.json", kRotModel);
  const std::string target = write("t.json", kDegree1Target);
  EXPECT_EQ(fqml({"fit", model, target}).code, 2);  // --seed is required
  const std::vector<std::string> args{"fit", model, target, "--seed", "1", "--loss-out",
                                      path("loss.csv"), "--params-out", path("params.json")};
  const auto r = fqml(args);
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(r.out.rfind("final_mse ", 0), 0U);
  EXPECT_LE(std::stod(r.out.substr(10)), 1e-3);
  const std::string loss = slurp(path("loss.csv"));
  EXPECT_EQ(loss.rfind("step,mse\n0,", 0), 0U);
  EXPECT_EQ(std::count(loss.begin(), loss.end(), '\n'), 202);

  // Same seed, same bytes; the fitted parameters evaluate to the same MSE.
  const auto again = fqml(args);
  EXPECT_EQ(again.out, r.out);
  EXPECT_EQ(slurp(path("loss.csv")), loss);
  const auto coeffs = fqml({"coeffs", model, "--params", path("params.json")});
  EXPECT_EQ(coeffs.code, 0);
}

TEST_F(Cli, FitSetupErrors) {
  const std::string model = write("rot.json", kRotModel);
  const std::string target = write("t.json", kDegree1Target);
  EXPECT_EQ(fqml({"fit", model, target, "--seed", "1", "--batch", "100"}).code, 5);
  EXPECT_EQ(fqml({"fit", model, target, "--seed", "1", "--gradient", "magic"}).code, 2);
  EXPECT_EQ(fqml({"fit", model, write("bad.json", "{}"), "--seed", "1"}).code, 2);
}

TEST_F(Cli, UniversalRoundTrip) {
  const std::string target = write("t.json", kDegree1Target);
  const auto r = fqml({"universal", target, "--out-dir", path("out")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"passed\":true"), std::string::npos);
  for (const char* f : {"gamma.json", "observable.json", "model.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
  }
  const auto coeffs = fqml({"coeffs", path("out/model.json")});
  ASSERT_EQ(coeffs.code, 0) << coeffs.err;
  const TargetSeries t = parse_target(kDegree1Target);
  const auto rows = csv_rows(coeffs.out);
  EXPECT_EQ(rows.size(), 3U);
  for (const auto& row : rows) {
    const Complex want = t.at({std::stoi(row[0])});
    EXPECT_NEAR(std::stod(row[1]), want.real(), 1e-9);
    EXPECT_NEAR(std::stod(row[2]), want.imag(), 1e-9);
  }
}

TEST_F(Cli, UniversalDimensionCap) {
  const std::string target = write(
      "deep.json", R"({"n_features": 1, "degree": 13, "coefficients": [{"n": 13, "c": [0.1, 0]}]})");
  EXPECT_EQ(fqml({"universal", target, "--out-dir", path("out")}).code, 6);
  EXPECT_EQ(fqml({"universal", write("bad.json", R"({"n_features": 1})")}).code, 2);
}

TEST_F(Cli, SampleCoeffsDeterministic) {
  const std::vector<std::string> args{"sample-coeffs", "--circuit", "B", "--sublayers", "3",
                                      "--qubits", "3", "--samples", "5", "--seed", "11",
                                      "--stats-out", path("stats.csv")};
  const auto a = fqml(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, fqml(args).out);
  EXPECT_EQ(a.out.rfind("sample_index,freq,re,im\n", 0), 0U);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1 + 5 * 6);
  EXPECT_EQ(slurp(path("stats.csv")).rfind("freq,mean_re", 0), 0U);
  EXPECT_EQ(fqml({"sample-coeffs", "--samples", "5"}).code, 2);
  EXPECT_EQ(fqml({"sample-coeffs", "--circuit", "C", "--seed", "1"}).code, 2);
  EXPECT_EQ(fqml({"sample-coeffs", "--qubits", "13", "--seed", "1"}).code, 6);
}

}  // namespace
}  // namespace fqml
