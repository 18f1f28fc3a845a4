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

#include "boxlab/game.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>

#include "boxlab/error.hpp"

namespace boxlab {

namespace {

void play_shard(const BipartiteBox& box, std::uint64_t seed, std::uint64_t shard, std::uint64_t begin,
                std::uint64_t end, std::vector<Round>& out) {
  Rng rng = substream(seed, shard);
  for (std::uint64_t t = begin; t < end; ++t) {
    const std::uint64_t bits = rng();
    const int x = static_cast<int>(bits >> 63);
    const int y = static_cast<int>((bits >> 62) & 1u);
    auto [a, b] = sample(box, x, y, rng);
    out[t] = Round{t, x, y, a, b};
  }
}

void require_rounds(std::uint64_t rounds) {
  if (rounds < 1) throw InvalidInput("play: rounds must be >= 1");
}

// log of n choose k
double log_choose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double fisher_exact_p(const std::array<std::array<std::uint64_t, 2>, 2>& c) {
  const std::uint64_t r0 = c[0][0] + c[0][1];
  const std::uint64_t r1 = c[1][0] + c[1][1];
  const std::uint64_t c0 = c[0][0] + c[1][0];
  const std::uint64_t n = r0 + r1;
  const std::uint64_t lo = c0 > r1 ? c0 - r1 : 0;
  const std::uint64_t hi = std::min(r0, c0);
  const double log_total = log_choose(n, c0);
  auto log_pmf = [&](std::uint64_t k) { return log_choose(r0, k) + log_choose(r1, c0 - k) - log_total; };
  const double observed = log_pmf(c[0][0]);
  double p = 0.0;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    const double lp = log_pmf(k);
    if (lp <= observed + 1e-7) p += std::exp(lp);
  }
  return std::min(1.0, p);
}

Autocorrelation lag1(const std::vector<double>& s) {
  Autocorrelation out;
  const double n = static_cast<double>(s.size());
  out.std_error = 1.0 / std::sqrt(n);
  double mean = 0.0;
  for (double v : s) mean += v;
  mean /= n;
  double den = 0.0;
  for (double v : s) den += (v - mean) * (v - mean);
  if (den <= 0.0) {
    out.note = "undefined: constant stream, trivially independent";
    return out;
  }
  double num = 0.0;
  for (std::size_t t = 0; t + 1 < s.size(); ++t) num += (s[t] - mean) * (s[t + 1] - mean);
  out.value = num / den;
  return out;
}

}  // namespace

GameTranscript play(const BipartiteBox& box, std::uint64_t rounds, std::uint64_t seed, std::string box_id) {
  require_rounds(rounds);
  GameTranscript tr{std::vector<Round>(rounds), std::move(box_id), seed};
  const std::int64_t shards = static_cast<std::int64_t>((rounds + kShardRounds - 1) / kShardRounds);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < shards; ++s) {
    const std::uint64_t begin = static_cast<std::uint64_t>(s) * kShardRounds;
    const std::uint64_t end = std::min(rounds, begin + kShardRounds);
    play_shard(box, seed, static_cast<std::uint64_t>(s), begin, end, tr.rounds);
  }
  return tr;
}

GameTranscript play_serial(const BipartiteBox& box, std::uint64_t rounds, std::uint64_t seed, std::string box_id) {
  require_rounds(rounds);
  GameTranscript tr{std::vector<Round>(rounds), std::move(box_id), seed};
  for (std::uint64_t s = 0, begin = 0; begin < rounds; ++s, begin += kShardRounds)
    play_shard(box, seed, s, begin, std::min(rounds, begin + kShardRounds), tr.rounds);
  return tr;
}

CorrelatorReport estimate_correlators(const GameTranscript& transcript, Valuation valuation) {
  std::array<std::array<double, 2>, 2> sum{}, sum_sq{};
  std::array<std::array<std::uint64_t, 2>, 2> count{};
  for (const Round& r : transcript.rounds) {
    const double v = outcome_value(valuation, r.a) * outcome_value(valuation, r.b);
    sum[r.x][r.y] += v;
    sum_sq[r.x][r.y] += v * v;
    ++count[r.x][r.y];
  }
  CorrelatorReport report;
  double var_chsh = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const std::uint64_t n = count[x][y];
      if (n == 0)
        throw EmptyCell("no rounds with x=" + std::to_string(x) + ", y=" + std::to_string(y));
      const double nd = static_cast<double>(n);
      CorrelatorEstimate& e = report.cells[x][y];
      e.count = n;
      e.mean = sum[x][y] / nd;
      if (n > 1) {
        const double var = std::max(0.0, (sum_sq[x][y] - nd * e.mean * e.mean) / (nd - 1.0));
        e.std_error = std::sqrt(var / nd);
      }
      const double sign = (x == 1 && y == 1) ? -1.0 : 1.0;
      report.chsh += sign * e.mean;
      var_chsh += e.std_error * e.std_error;
    }
  }
  report.chsh_std_error = std::sqrt(var_chsh);
  return report;
}

std::string to_string(HomogeneityMethod method) {
  switch (method) {
    case HomogeneityMethod::Pearson:
      return "chi_square";
    case HomogeneityMethod::Yates:
      return "chi_square_yates";
    case HomogeneityMethod::FisherExact:
      return "fisher_exact";
  }
  return "unknown";
}

HomogeneityTest homogeneity_test(const std::array<std::array<std::uint64_t, 2>, 2>& counts) {
  HomogeneityTest t{};
  t.counts = counts;
  const double r0 = static_cast<double>(counts[0][0] + counts[0][1]);
  const double r1 = static_cast<double>(counts[1][0] + counts[1][1]);
  if (r0 == 0.0 || r1 == 0.0) throw EmptyCell("homogeneity test needs both samples nonempty");
  const double c0 = static_cast<double>(counts[0][0] + counts[1][0]);
  const double c1 = static_cast<double>(counts[0][1] + counts[1][1]);
  const double n = r0 + r1;
  const std::array<double, 2> rows{r0, r1}, cols{c0, c1};
  double min_expected = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) min_expected = std::min(min_expected, rows[i] * cols[j] / n);

  if (min_expected < 5.0) {
    t.method = HomogeneityMethod::FisherExact;
    t.statistic = 0.0;
    t.p_value = fisher_exact_p(counts);
  } else {
    t.method = min_expected < 10.0 ? HomogeneityMethod::Yates : HomogeneityMethod::Pearson;
    const double correction = t.method == HomogeneityMethod::Yates ? 0.5 : 0.0;
    double stat = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double expected = rows[i] * cols[j] / n;
        const double dev = std::max(0.0, std::abs(static_cast<double>(counts[i][j]) - expected) - correction);
        stat += dev * dev / expected;
      }
    t.statistic = stat;
    t.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(1.0), stat));
  }
  t.adjusted_p_value = t.p_value;
  return t;
}

SignalingReport signaling_test(const GameTranscript& transcript, double significance) {
  // counts[party][own input][other input][own output]
  std::array<std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2>, 2> c{};
  for (const Round& r : transcript.rounds) {
    ++c[0][r.x][r.y][r.a];
    ++c[1][r.y][r.x][r.b];
  }
  SignalingReport report;
  report.significance = significance;
  report.min_adjusted_p = 1.0;
  for (int party = 0; party < 2; ++party) {
    for (int input = 0; input < 2; ++input) {
      HomogeneityTest t = homogeneity_test(c[party][input]);
      t.party = party == 0 ? Party::Alice : Party::Bob;
      t.input = input;
      t.adjusted_p_value = std::min(1.0, 4.0 * t.p_value);
      t.reject = t.adjusted_p_value < significance;
      report.min_adjusted_p = std::min(report.min_adjusted_p, t.adjusted_p_value);
      report.tests.push_back(t);
    }
  }
  report.reject = report.min_adjusted_p < significance;
  return report;
}

IndependenceReport independence_test(const GameTranscript& transcript, Valuation valuation) {
  const auto& rounds = transcript.rounds;
  if (rounds.size() < 2) throw InvalidInput("independence test needs at least two rounds");
  std::vector<double> sa, sb, sp;
  sa.reserve(rounds.size());
  sb.reserve(rounds.size());
  sp.reserve(rounds.size());
  for (const Round& r : rounds) {
    sa.push_back(outcome_value(valuation, r.a));
    sb.push_back(outcome_value(valuation, r.b));
    sp.push_back(sa.back() * sb.back());
  }
  IndependenceReport report;
  report.alice = lag1(sa);
  report.bob = lag1(sb);
  report.product = lag1(sp);
  for (const Autocorrelation* ac : {&report.alice, &report.bob, &report.product})
    if (ac->value && std::abs(*ac->value) > 4.0 * ac->std_error) report.dependent = true;

  for (int party = 0; party < 2; ++party) {
    auto input_of = [party](const Round& r) { return party == 0 ? r.x : r.y; };
    auto output_of = [party](const Round& r) { return party == 0 ? r.a : r.b; };
    std::array<std::uint64_t, 2> n_input{}, n_zero{};
    for (const Round& r : rounds) {
      ++n_input[input_of(r)];
      if (output_of(r) == 0) ++n_zero[input_of(r)];
    }
    // [input][prev input][prev output]
    std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2> n_cond{}, n_cond_zero{};
    for (std::size_t t = 1; t < rounds.size(); ++t) {
      const Round& prev = rounds[t - 1];
      const Round& cur = rounds[t];
      ++n_cond[input_of(cur)][input_of(prev)][output_of(prev)];
      if (output_of(cur) == 0) ++n_cond_zero[input_of(cur)][input_of(prev)][output_of(prev)];
    }
    for (int x = 0; x < 2; ++x) {
      if (n_input[x] == 0) continue;
      const double marginal = static_cast<double>(n_zero[x]) / static_cast<double>(n_input[x]);
      for (int px = 0; px < 2; ++px)
        for (int pa = 0; pa < 2; ++pa) {
          const std::uint64_t n = n_cond[x][px][pa];
          if (n == 0) continue;
          ConditionalFrequency f{party == 0 ? Party::Alice : Party::Bob, x, 0, px, pa, n, 0.0, marginal, 0.0};
          f.conditional = static_cast<double>(n_cond_zero[x][px][pa]) / static_cast<double>(n);
          const double var = marginal * (1.0 - marginal) / static_cast<double>(n);
          if (var > 0.0) {
            f.z = (f.conditional - marginal) / std::sqrt(var);
          } else {
            f.z = f.conditional == marginal ? 0.0 : std::numeric_limits<double>::infinity();
          }
          report.max_abs_z = std::max(report.max_abs_z, std::abs(f.z));
          report.conditionals.push_back(f);
        }
    }
  }
  return report;
}

}  // namespace boxlab
