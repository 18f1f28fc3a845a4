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

#include <cstdint>

namespace boxlab {

// Seeded random ensembles over commuting Alice/Bob observables. Trial i draws
// from substream(seed, i), so the parallel and serial versions agree exactly.

struct TsirelsonEnsembleResult {
  int trials = 0;
  double max_value = 0.0;  // largest |<C>| seen
  int argmax_trial = -1;
};

/// Random spectrum-bounded observables (involutions on odd trials, general
/// bounded on even ones) and random pure or mixed states of local dimension `dim`.
TsirelsonEnsembleResult tsirelson_ensemble(int trials, int dim, std::uint64_t seed);
TsirelsonEnsembleResult tsirelson_ensemble_serial(int trials, int dim, std::uint64_t seed);

enum class ObservableFamily { Involution, Bounded };

struct LandauEnsembleResult {
  int trials = 0;
  double max_identity_residual = 0.0;
  double min_psd_margin = 0.0;
  double max_mirror_identity_residual = 0.0;
  double min_mirror_psd_margin = 0.0;
};

LandauEnsembleResult landau_ensemble(int trials, int dim, ObservableFamily family, std::uint64_t seed);
LandauEnsembleResult landau_ensemble_serial(int trials, int dim, ObservableFamily family, std::uint64_t seed);

}  // namespace boxlab
