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

#include "boxlab/ensembles.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <vector>

#include "boxlab/error.hpp"
#include "boxlab/operators.hpp"
#include "boxlab/rng.hpp"

namespace boxlab {

namespace {

double tsirelson_trial(int i, int dim, std::uint64_t seed) {
  Rng rng = substream(seed, static_cast<std::uint64_t>(i));
  auto draw = [&]() { return (i % 2) ? random_involution(dim, rng) : random_bounded_observable(dim, rng); };
  Observable a0 = draw(), a1 = draw(), b0 = draw(), b1 = draw();
  const int joint = dim * dim;
  QuantumState state = (i % 3 == 0) ? random_mixed_state(joint, rng) : random_pure_state(joint, rng);
  return tsirelson_check(a0, a1, b0, b1, state);
}

LandauResult landau_trial(int i, int dim, ObservableFamily family, std::uint64_t seed) {
  Rng rng = substream(seed, static_cast<std::uint64_t>(i));
  auto draw = [&]() {
    return family == ObservableFamily::Involution ? random_involution(dim, rng) : random_bounded_observable(dim, rng);
  };
  Observable a0 = draw(), a1 = draw(), b0 = draw(), b1 = draw();
  return landau_check(a0, a1, b0, b1);
}

TsirelsonEnsembleResult reduce(const std::vector<double>& values) {
  TsirelsonEnsembleResult r;
  r.trials = static_cast<int>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (r.argmax_trial < 0 || values[i] > r.max_value) {
      r.max_value = values[i];
      r.argmax_trial = static_cast<int>(i);
    }
  return r;
}

LandauEnsembleResult reduce(const std::vector<LandauResult>& values) {
  LandauEnsembleResult r;
  r.trials = static_cast<int>(values.size());
  r.min_psd_margin = std::numeric_limits<double>::infinity();
  r.min_mirror_psd_margin = std::numeric_limits<double>::infinity();
  for (const auto& v : values) {
    r.max_identity_residual = std::max(r.max_identity_residual, v.identity_residual);
    r.max_mirror_identity_residual = std::max(r.max_mirror_identity_residual, v.mirror_identity_residual);
    r.min_psd_margin = std::min(r.min_psd_margin, v.psd_margin);
    r.min_mirror_psd_margin = std::min(r.min_mirror_psd_margin, v.mirror_psd_margin);
  }
  return r;
}

void check_args(int trials, int dim) {
  if (trials < 1) throw InvalidInput("ensemble needs at least one trial");
  if (dim < 1 || dim > kMaxLocalDim) throw InvalidInput("ensemble dimension must be in [1, 8]");
}

// Exceptions must not escape an OpenMP region; collect and rethrow the first.
void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

TsirelsonEnsembleResult tsirelson_ensemble(int trials, int dim, std::uint64_t seed) {
  check_args(trials, dim);
  std::vector<double> values(static_cast<std::size_t>(trials));
  std::vector<std::exception_ptr> errors(values.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < trials; ++i) {
    try {
      values[static_cast<std::size_t>(i)] = tsirelson_trial(i, dim, seed);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return reduce(values);
}

TsirelsonEnsembleResult tsirelson_ensemble_serial(int trials, int dim, std::uint64_t seed) {
  check_args(trials, dim);
  std::vector<double> values;
  for (int i = 0; i < trials; ++i) values.push_back(tsirelson_trial(i, dim, seed));
  return reduce(values);
}

LandauEnsembleResult landau_ensemble(int trials, int dim, ObservableFamily family, std::uint64_t seed) {
  check_args(trials, dim);
  std::vector<LandauResult> values(static_cast<std::size_t>(trials));
  std::vector<std::exception_ptr> errors(values.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < trials; ++i) {
    try {
      values[static_cast<std::size_t>(i)] = landau_trial(i, dim, family, seed);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return reduce(values);
}

LandauEnsembleResult landau_ensemble_serial(int trials, int dim, ObservableFamily family, std::uint64_t seed) {
  check_args(trials, dim);
  std::vector<LandauResult> values;
  for (int i = 0; i < trials; ++i) values.push_back(landau_trial(i, dim, family, seed));
  return reduce(values);
}

}  // namespace boxlab
