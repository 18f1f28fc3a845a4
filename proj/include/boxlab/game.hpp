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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxlab/box.hpp"

namespace boxlab {

struct Round {
  std::uint64_t t;
  int x, y, a, b;
  friend bool operator==(const Round&, const Round&) = default;
};

struct GameTranscript {
  std::vector<Round> rounds;
  std::string box_id;
  std::uint64_t seed = 0;
};

/// Rounds per shard. Shard s draws from substream(seed, s), so a transcript
/// depends only on (box, rounds, seed), never on the thread count.
inline constexpr std::uint64_t kShardRounds = 1u << 16;

/// Plays i.i.d. rounds: (x, y) uniform, then (a, b) from the box. Shards run in parallel.
GameTranscript play(const BipartiteBox& box, std::uint64_t rounds, std::uint64_t seed, std::string box_id = "");
/// Single-threaded reference for play(); produces the identical transcript.
GameTranscript play_serial(const BipartiteBox& box, std::uint64_t rounds, std::uint64_t seed,
                           std::string box_id = "");

struct CorrelatorEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t count = 0;
};

struct CorrelatorReport {
  std::array<std::array<CorrelatorEstimate, 2>, 2> cells;  // [x][y]
  double chsh = 0.0;
  double chsh_std_error = 0.0;
};

/// Per-cell sample mean of v(a) v(b) with its standard error. Throws EmptyCell.
CorrelatorReport estimate_correlators(const GameTranscript& transcript, Valuation valuation = Valuation::Signed);

enum class HomogeneityMethod { Pearson, Yates, FisherExact };
std::string to_string(HomogeneityMethod method);

/// Two-sample homogeneity test on a 2x2 table counts[sample][output].
struct HomogeneityTest {
  Party party;
  int input;
  std::array<std::array<std::uint64_t, 2>, 2> counts;  // [other party's input][output]
  HomogeneityMethod method;
  double statistic;
  double p_value;
  double adjusted_p_value;  // Bonferroni over the four tests of a report
  bool reject;
};

/// Chi-square (expected counts >= 10), Yates-corrected chi-square (5 <= min
/// expected < 10), or Fisher's exact test (min expected < 5).
HomogeneityTest homogeneity_test(const std::array<std::array<std::uint64_t, 2>, 2>& counts);

struct SignalingReport {
  std::vector<HomogeneityTest> tests;  // alice x=0, alice x=1, bob y=0, bob y=1
  double significance;
  double min_adjusted_p;
  bool reject;
};

/// For each party and input, tests whether that party's output distribution
/// depends on the other party's input. The transcript-level decision rejects
/// when any Bonferroni-adjusted p-value is below `significance`. Throws EmptyCell.
SignalingReport signaling_test(const GameTranscript& transcript, double significance = 0.05);

struct Autocorrelation {
  std::optional<double> value;  // nullopt for a constant stream
  double std_error = 0.0;
  std::string note;
};

struct ConditionalFrequency {
  Party party;
  int input, output;            // current round
  int prev_input, prev_output;  // previous round, same party
  std::uint64_t count;          // rounds matching the previous-round condition and current input
  double conditional;
  double marginal;
  double z;
};

struct IndependenceReport {
  Autocorrelation alice, bob, product;
  std::vector<ConditionalFrequency> conditionals;
  double max_abs_z = 0.0;
  /// Any defined lag-1 autocorrelation beyond 4 standard errors.
  bool dependent = false;
};

/// Lag-1 dependence checks on the outcome streams. Needs at least 2 rounds.
IndependenceReport independence_test(const GameTranscript& transcript, Valuation valuation = Valuation::Signed);

}  // namespace boxlab
