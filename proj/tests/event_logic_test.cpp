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

#include <doctest.h>

#include <cmath>

#include "boxlab/error.hpp"
#include "boxlab/event_logic.hpp"
#include "boxlab/game.hpp"

using namespace boxlab;

namespace {

Proposition A(int x, int a, std::int64_t t = 1) { return Proposition::atom(Party::Alice, x, a, t); }
Proposition B(int y, int b, std::int64_t t = 1) { return Proposition::atom(Party::Bob, y, b, t); }

}  // namespace

TEST_CASE("compatible") {
  CHECK_FALSE(compatible(A(0, 0).as_atom(), A(1, 0).as_atom()));
  CHECK(compatible(A(0, 0).as_atom(), B(1, 0).as_atom()));
  CHECK(compatible(A(0, 0, 1).as_atom(), A(1, 0, 2).as_atom()));
  CHECK(compatible(A(0, 0).as_atom(), A(0, 1).as_atom()));
}

TEST_CASE("atoms and malformed input") {
  CHECK(probability(A(0, 0), pr_box()).value == 0.5);
  CHECK_THROWS_AS(A(2, 0), MalformedProposition);
  CHECK_THROWS_AS(Proposition::conj({}), MalformedProposition);
  CHECK_THROWS_AS(parse_proposition("and(A:0=0@1"), MalformedProposition);
  CHECK_THROWS_AS(parse_proposition("C:0=0@1"), MalformedProposition);
  CHECK_THROWS_AS(parse_proposition("xor(A:0=0@1, A:0=1@1)"), MalformedProposition);
}

TEST_CASE("parse round trip") {
  const char* text = "and(A:0=0@1, or(A:1=0@1, A:1=1@1))";
  Proposition p = parse_proposition(text);
  CHECK(p.to_string() == text);
  CHECK(parse_proposition(p.to_string()).to_string() == p.to_string());
  CHECK(parse_proposition(" or( B:1=0@-3 ,A:0=1@2 ) ").to_string() == "or(B:1=0@-3, A:0=1@2)");
}

TEST_CASE("distributivity counterexample") {
  DistributivityReport pr = distributivity_counterexample(pr_box());
  REQUIRE(pr.p_phi.defined());
  CHECK(*pr.p_phi.value == 0.5);
  CHECK_FALSE(pr.p_phi_prime.defined());
  CHECK_FALSE(pr.p_phi_prime.reason.empty());

  DistributivityReport u = distributivity_counterexample(uniform_box());
  CHECK(u.p_phi.value == 0.5);
  CHECK_FALSE(u.p_phi_prime.defined());

  DistributivityReport d = distributivity_counterexample(deterministic_box({0, 0}, {0, 0}));
  CHECK(d.p_phi.value == 1.0);
  CHECK_FALSE(d.p_phi_prime.defined());
}

TEST_CASE("connectives") {
  const BipartiteBox pr = pr_box();
  // Joint event across parties in one round.
  CHECK(probability(Proposition::conj({A(1, 0), B(1, 1)}), pr).value == 0.5);
  CHECK(probability(Proposition::conj({A(1, 0), B(1, 0)}), pr).value == 0.0);
  // Complementary pair.
  CHECK(probability(Proposition::disj({A(1, 0), A(1, 1)}), pr).value == 1.0);
  // Idempotent duplicates.
  CHECK(probability(Proposition::conj({A(0, 0), A(0, 0)}), pr).value == 0.5);
  // Contradiction in one context.
  CHECK(probability(Proposition::conj({A(0, 0), A(0, 1)}), pr).value == 0.0);
  // Incompatible conjunction.
  CHECK_FALSE(probability(Proposition::conj({A(0, 0), A(1, 0)}), pr).defined());
  // Undefined propagates through a disjunction.
  CHECK_FALSE(probability(Proposition::disj({Proposition::conj({A(0, 0), A(1, 0)}), B(0, 0)}), pr).defined());
  // Distinct times are independent rounds.
  CHECK(probability(Proposition::conj({A(0, 0, 1), A(1, 0, 2)}), pr).value == 0.25);
}

TEST_CASE("property: compatible conjunctions are defined") {
  const BipartiteBox pr = pr_box();
  std::vector<Proposition> atoms;
  for (Party p : {Party::Alice, Party::Bob})
    for (int in = 0; in < 2; ++in)
      for (int out = 0; out < 2; ++out)
        for (std::int64_t t : {1, 2}) atoms.push_back(Proposition::atom(p, in, out, t));
  for (const auto& p : atoms)
    for (const auto& q : atoms) {
      ProbabilityResult r = probability(Proposition::conj({p, q}), pr);
      CHECK(r.defined() == compatible(p.as_atom(), q.as_atom()));
      if (r.defined()) {
        CHECK(*r.value >= 0.0);
        CHECK(*r.value <= 1.0);
      }
    }
}

TEST_CASE("property: distinct-time factorization matches transcript frequencies") {
  const BipartiteBox box = mix(std::vector{pr_box(), deterministic_box({0, 1}, {1, 1})}, std::vector{0.6, 0.4});
  GameTranscript tr = play(box, 200000, 21);
  // P[(a=0|x=0)_t and (b=1|y=1)_{t+1}] estimated over consecutive rounds with those inputs.
  std::uint64_t hits = 0, n = 0;
  for (std::size_t i = 0; i + 1 < tr.rounds.size(); ++i) {
    const Round &r0 = tr.rounds[i], &r1 = tr.rounds[i + 1];
    if (r0.x != 0 || r1.y != 1) continue;
    ++n;
    hits += (r0.a == 0 && r1.b == 1);
  }
  const double p = *probability(Proposition::conj({A(0, 0, 1), B(1, 1, 2)}), box).value;
  const double freq = double(hits) / double(n);
  CHECK(std::abs(freq - p) <= 4 * std::sqrt(p * (1 - p) / double(n)));
}
