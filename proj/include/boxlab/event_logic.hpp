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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boxlab/box.hpp"

namespace boxlab {

/// "party pushed input at time t and obtained output".
struct Atom {
  Party party;
  int input;
  int output;
  std::int64_t time;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite tree of atoms under conjunction and disjunction.
class Proposition {
 public:
  enum class Kind { Atom, And, Or };

  /// Throws MalformedProposition for inputs or outputs outside {0, 1}.
  static Proposition atom(Party party, int input, int output, std::int64_t time);
  /// Throws MalformedProposition on an empty operand list.
  static Proposition conj(std::vector<Proposition> operands);
  static Proposition disj(std::vector<Proposition> operands);

  Kind kind() const { return kind_; }
  const Atom& as_atom() const { return atom_; }
  std::span<const Proposition> operands() const { return operands_; }

  /// Prefix syntax accepted by parse_proposition, e.g. and(A:0=0@1, or(B:1=0@1, B:1=1@1)).
  std::string to_string() const;

 private:
  Proposition() = default;
  Kind kind_ = Kind::Atom;
  Atom atom_{};
  std::vector<Proposition> operands_;
};

/// Parses the prefix syntax: atoms are P:input=output@time with P in {A, B};
/// connectives are and(...) and or(...). Throws MalformedProposition.
Proposition parse_proposition(std::string_view text);

/// False exactly when both atoms belong to the same party at the same time
/// with different inputs.
bool compatible(const Atom& p, const Atom& q);

struct ProbabilityResult {
  std::optional<double> value;
  std::string reason;  // why the value is undefined
  bool defined() const { return value.has_value(); }
  static ProbabilityResult defined_as(double v) { return {v, {}}; }
  static ProbabilityResult undefined(std::string why) { return {std::nullopt, std::move(why)}; }
};

/// Probability of a proposition in repeated play of `box`, each atom
/// conditioned on its own input and distinct times independent.
///
/// A proposition whose atoms are pairwise compatible lives in a Boolean
/// sub-algebra and is evaluated classically. Otherwise:
///  - a conjunction drops operands that are tautologies within one context
///    (such as a complementary pair on the same input and time) and is
///    Undefined if incompatible atoms remain;
///  - a disjunction is the sum of its operands when every operand is defined
///    and they are pairwise exclusive, and Undefined otherwise.
ProbabilityResult probability(const Proposition& prop, const BipartiteBox& box);

struct DistributivityReport {
  Proposition phi;        // (a/0)_t and [(0/1)_t or (1/1)_t]
  Proposition phi_prime;  // [(a/0)_t and (0/1)_t] or [(a/0)_t and (1/1)_t]
  ProbabilityResult p_phi;
  ProbabilityResult p_phi_prime;
};

/// Builds the pair for Alice's output a = 0 at time `time` and evaluates both.
DistributivityReport distributivity_counterexample(const BipartiteBox& box, std::int64_t time = 1);

}  // namespace boxlab
