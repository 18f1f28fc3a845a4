// Copyright 2026 The boxlab Authors
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

namespace boxlab {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BOXLAB_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

BOXLAB_DEFINE_ERROR(NormalizationError);
BOXLAB_DEFINE_ERROR(NegativeProbability);
BOXLAB_DEFINE_ERROR(WeightError);
BOXLAB_DEFINE_ERROR(DimensionMismatch);
BOXLAB_DEFINE_ERROR(NonHermitian);
BOXLAB_DEFINE_ERROR(SpectrumError);
BOXLAB_DEFINE_ERROR(BoundViolation);
BOXLAB_DEFINE_ERROR(ProjectorError);
BOXLAB_DEFINE_ERROR(EmptyCell);
BOXLAB_DEFINE_ERROR(MissingAngle);
BOXLAB_DEFINE_ERROR(MalformedProposition);
BOXLAB_DEFINE_ERROR(InvalidInput);

#undef BOXLAB_DEFINE_ERROR

}  // namespace boxlab
