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

#include <stdexcept>
#include <string>

namespace fqml {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FQML_DEFINE_ERROR(Name)              \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

FQML_DEFINE_ERROR(InvalidArgument);
FQML_DEFINE_ERROR(OverflowError);
FQML_DEFINE_ERROR(IncommensurableError);
FQML_DEFINE_ERROR(DimensionMismatch);
FQML_DEFINE_ERROR(ParamCountMismatch);
FQML_DEFINE_ERROR(NotHermitian);
FQML_DEFINE_ERROR(NotUnitary);
FQML_DEFINE_ERROR(TooManyPaths);
FQML_DEFINE_ERROR(NonIntegerSpectrum);
FQML_DEFINE_ERROR(AsymmetricCoefficients);
FQML_DEFINE_ERROR(GridMismatch);
FQML_DEFINE_ERROR(DimensionCap);
FQML_DEFINE_ERROR(EmptyDataset);
FQML_DEFINE_ERROR(EmptySamples);
FQML_DEFINE_ERROR(UnknownGeneratorType);

#undef FQML_DEFINE_ERROR

/// Malformed model or target document. `path()` is a JSON pointer to the
/// offending value ("" for the document root).
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace fqml
