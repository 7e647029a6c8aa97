// Copyright 2026 The Bargmann Teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bargmann {

// Every library failure derives from Error; name() is the stable,
// machine-readable identifier surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

#define BARGMANN_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* name() const noexcept override { return #Type; }      \
  }

BARGMANN_DEFINE_ERROR(InvalidArgument);
BARGMANN_DEFINE_ERROR(DimensionMismatch);
BARGMANN_DEFINE_ERROR(SingularBlock);
BARGMANN_DEFINE_ERROR(DivergentIntegral);
BARGMANN_DEFINE_ERROR(ConstraintViolation);
BARGMANN_DEFINE_ERROR(NumericalFailure);
BARGMANN_DEFINE_ERROR(CutoffError);
BARGMANN_DEFINE_ERROR(MeasurementError);
BARGMANN_DEFINE_ERROR(SectorViolation);
BARGMANN_DEFINE_ERROR(ConfigError);

#undef BARGMANN_DEFINE_ERROR

}  // namespace bargmann
