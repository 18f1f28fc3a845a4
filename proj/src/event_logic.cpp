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

#include "boxlab/event_logic.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "boxlab/error.hpp"

namespace boxlab {

Proposition Proposition::atom(Party party, int input, int output, std::int64_t time) {
  if ((input != 0 && input != 1) || (output != 0 && output != 1))
    throw MalformedProposition("atom input and output must be 0 or 1");
  Proposition p;
  p.kind_ = Kind::Atom;
  p.atom_ = Atom{party, input, output, time};
  return p;
}

Proposition Proposition::conj(std::vector<Proposition> operands) {
  if (operands.empty()) throw MalformedProposition("and() needs at least one operand");
  Proposition p;
  p.kind_ = Kind::And;
  p.operands_ = std::move(operands);
  return p;
}

Proposition Proposition::disj(std::vector<Proposition> operands) {
  if (operands.empty()) throw MalformedProposition("or() needs at least one operand");
  Proposition p;
  p.kind_ = Kind::Or;
  p.operands_ = std::move(operands);
  return p;
}

std::string Proposition::to_string() const {
  std::ostringstream out;
  if (kind_ == Kind::Atom) {
    out << (atom_.party == Party::Alice ? 'A' : 'B') << ':' << atom_.input << '=' << atom_.output << '@' << atom_.time;
    return out.str();
  }
  out << (kind_ == Kind::And ? "and(" : "or(");
  for (std::size_t i = 0; i < operands_.size(); ++i) out << (i ? ", " : "") << operands_[i].to_string();
  out << ')';
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Proposition parse() {
    Proposition p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedProposition(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_ws();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  Proposition expr() {
    if (consume("and(")) return Proposition::conj(list());
    if (consume("or(")) return Proposition::disj(list());
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    Party party;
    if (s_[pos_] == 'A') {
      party = Party::Alice;
    } else if (s_[pos_] == 'B') {
      party = Party::Bob;
    } else {
      fail("expected and(, or(, A or B");
    }
    ++pos_;
    expect(':');
    const std::int64_t input = integer();
    expect('=');
    const std::int64_t output = integer();
    expect('@');
    const std::int64_t time = integer();
    if ((input != 0 && input != 1) || (output != 0 && output != 1)) fail("input and output must be 0 or 1");
    return Proposition::atom(party, static_cast<int>(input), static_cast<int>(output), time);
  }

  std::vector<Proposition> list() {
    std::vector<Proposition> out;
    out.push_back(expr());
    while (consume(",")) out.push_back(expr());
    expect(')');
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect_atoms(const Proposition& p, std::vector<Atom>& out) {
  if (p.kind() == Proposition::Kind::Atom) {
    out.push_back(p.as_atom());
    return;
  }
  for (const auto& q : p.operands()) collect_atoms(q, out);
}

std::vector<Atom> atoms_of(const Proposition& p) {
  std::vector<Atom> out;
  collect_atoms(p, out);
  return out;
}

std::optional<std::pair<Atom, Atom>> first_incompatible(const std::vector<Atom>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (!compatible(atoms[i], atoms[j])) return std::pair{atoms[i], atoms[j]};
  return std::nullopt;
}

std::string describe(const Atom& a) { return Proposition::atom(a.party, a.input, a.output, a.time).to_string(); }

/// Joint outcome space of a compatible atom set: one binary output per
/// (party, time) context, whose input is fixed by the atoms.
class BooleanContext {
 public:
  explicit BooleanContext(const std::vector<Atom>& atoms) {
    for (const Atom& a : atoms) {
      auto key = std::pair{a.time, a.party == Party::Alice ? 0 : 1};
      if (!slots_.count(key)) {
        slots_[key] = static_cast<int>(inputs_.size());
        inputs_.push_back(a.input);
      }
    }
    if (inputs_.size() > 20) throw MalformedProposition("too many distinct (party, time) contexts");
  }

  std::uint64_t assignments() const { return std::uint64_t{1} << inputs_.size(); }

  bool holds(const Proposition& p, std::uint64_t bits) const {
    switch (p.kind()) {
      case Proposition::Kind::Atom: {
        const Atom& a = p.as_atom();
        const int slot = slots_.at({a.time, a.party == Party::Alice ? 0 : 1});
        return static_cast<int>((bits >> slot) & 1u) == a.output;
      }
      case Proposition::Kind::And:
        for (const auto& q : p.operands())
          if (!holds(q, bits)) return false;
        return true;
      case Proposition::Kind::Or:
        for (const auto& q : p.operands())
          if (holds(q, bits)) return true;
        return false;
    }
    return false;
  }

  double weight(const BipartiteBox& box, std::uint64_t bits) const {
    // Group the two parties' contexts by time; distinct times are independent.
    std::map<std::int64_t, std::pair<int, int>> by_time;  // slot of Alice, slot of Bob (-1 if absent)
    for (const auto& [key, slot] : slots_) {
      auto& entry = by_time.try_emplace(key.first, -1, -1).first->second;
      (key.second == 0 ? entry.first : entry.second) = slot;
    }
    double w = 1.0;
    for (const auto& [time, slots] : by_time) {
      const auto [sa, sb] = slots;
      const int a = sa >= 0 ? static_cast<int>((bits >> sa) & 1u) : 0;
      const int b = sb >= 0 ? static_cast<int>((bits >> sb) & 1u) : 0;
      if (sa >= 0 && sb >= 0) {
        w *= box(inputs_[sa], inputs_[sb], a, b);
      } else if (sa >= 0) {
        w *= marginal_a(box, a, inputs_[sa]);
      } else {
        w *= marginal_b(box, b, inputs_[sb]);
      }
    }
    return w;
  }

 private:
  std::map<std::pair<std::int64_t, int>, int> slots_;
  std::vector<int> inputs_;
};

double boolean_probability(const Proposition& p, const BipartiteBox& box) {
  BooleanContext ctx(atoms_of(p));
  double total = 0.0;
  for (std::uint64_t bits = 0; bits < ctx.assignments(); ++bits)
    if (ctx.holds(p, bits)) total += ctx.weight(box, bits);
  return total;
}

bool is_tautology(const Proposition& p) {
  auto atoms = atoms_of(p);
  if (first_incompatible(atoms)) return false;
  BooleanContext ctx(atoms);
  for (std::uint64_t bits = 0; bits < ctx.assignments(); ++bits)
    if (!ctx.holds(p, bits)) return false;
  return true;
}

// Conjunctions of atoms (or single atoms) as a flat list; nullopt otherwise.
std::optional<std::vector<Atom>> conjunctive_atoms(const Proposition& p) {
  if (p.kind() == Proposition::Kind::Atom) return std::vector<Atom>{p.as_atom()};
  if (p.kind() != Proposition::Kind::And) return std::nullopt;
  std::vector<Atom> out;
  for (const auto& q : p.operands()) {
    auto sub = conjunctive_atoms(q);
    if (!sub) return std::nullopt;
    out.insert(out.end(), sub->begin(), sub->end());
  }
  return out;
}

bool mutually_exclusive(const Proposition& p, const Proposition& q) {
  auto atoms = atoms_of(p);
  auto more = atoms_of(q);
  atoms.insert(atoms.end(), more.begin(), more.end());
  if (!first_incompatible(atoms)) {
    BooleanContext ctx(atoms);
    for (std::uint64_t bits = 0; bits < ctx.assignments(); ++bits)
      if (ctx.holds(p, bits) && ctx.holds(q, bits)) return false;
    return true;
  }
  // Across contexts: exclusive only through a shared context with different outputs.
  auto lp = conjunctive_atoms(p);
  auto lq = conjunctive_atoms(q);
  if (!lp || !lq) return false;
  for (const Atom& a : *lp)
    for (const Atom& b : *lq)
      if (a.party == b.party && a.time == b.time && a.input == b.input && a.output != b.output) return true;
  return false;
}

}  // namespace

Proposition parse_proposition(std::string_view text) { return Parser(text).parse(); }

bool compatible(const Atom& p, const Atom& q) {
  return !(p.party == q.party && p.time == q.time && p.input != q.input);
}

ProbabilityResult probability(const Proposition& prop, const BipartiteBox& box) {
  const auto atoms = atoms_of(prop);
  const auto clash = first_incompatible(atoms);
  if (!clash) return ProbabilityResult::defined_as(boolean_probability(prop, box));

  if (prop.kind() == Proposition::Kind::And) {
    std::vector<Proposition> kept;
    for (const auto& q : prop.operands())
      if (!is_tautology(q)) kept.push_back(q);
    if (kept.empty()) return ProbabilityResult::defined_as(1.0);
    Proposition reduced = kept.size() == 1 ? kept.front() : Proposition::conj(kept);
    const auto remaining = first_incompatible(atoms_of(reduced));
    if (!remaining) return ProbabilityResult::defined_as(boolean_probability(reduced, box));
    return ProbabilityResult::undefined("conjunction of incompatible descriptions " + describe(remaining->first) +
                                        " and " + describe(remaining->second));
  }

  // Disjunction spanning incompatible contexts.
  double total = 0.0;
  const auto operands = prop.operands();
  for (const auto& q : operands) {
    ProbabilityResult r = probability(q, box);
    if (!r.defined()) return ProbabilityResult::undefined("disjunct " + q.to_string() + " is undefined: " + r.reason);
    total += *r.value;
  }
  for (std::size_t i = 0; i < operands.size(); ++i)
    for (std::size_t j = i + 1; j < operands.size(); ++j)
      if (!mutually_exclusive(operands[i], operands[j]))
        return ProbabilityResult::undefined("disjuncts " + operands[i].to_string() + " and " +
                                            operands[j].to_string() + " are not exclusive across contexts");
  return ProbabilityResult::defined_as(total);
}

DistributivityReport distributivity_counterexample(const BipartiteBox& box, std::int64_t time) {
  const auto a0 = Proposition::atom(Party::Alice, 0, 0, time);
  const auto a1_0 = Proposition::atom(Party::Alice, 1, 0, time);
  const auto a1_1 = Proposition::atom(Party::Alice, 1, 1, time);
  Proposition phi = Proposition::conj({a0, Proposition::disj({a1_0, a1_1})});
  Proposition phi_prime = Proposition::disj({Proposition::conj({a0, a1_0}), Proposition::conj({a0, a1_1})});
  ProbabilityResult p_phi = probability(phi, box);
  ProbabilityResult p_phi_prime = probability(phi_prime, box);
  return {std::move(phi), std::move(phi_prime), std::move(p_phi), std::move(p_phi_prime)};
}

}  // namespace boxlab
