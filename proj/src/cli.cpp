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

#include "boxlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "boxlab/box.hpp"
#include "boxlab/error.hpp"
#include "boxlab/event_logic.hpp"
#include "boxlab/game.hpp"
#include "boxlab/operators.hpp"
#include "boxlab/optimizer.hpp"
#include "boxlab/toy_model.hpp"

namespace boxlab::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::string out;
  bool json = false;
};

struct BoxSource {
  std::string file;
  bool pr = false;
  bool uniform = false;
  bool copy = false;
  std::vector<int> deterministic;

  void attach(CLI::App* sub, const std::string& file_flag = "--in") {
    sub->add_option(file_flag, file, "Box JSON file");
    sub->add_flag("--pr", pr, "Use the PR box");
    sub->add_flag("--uniform", uniform, "Use the uniform box");
    sub->add_flag("--copy", copy, "Use the signaling box where Bob outputs Alice's input");
    sub->add_option("--deterministic", deterministic, "Local strategy fa0,fa1,fb0,fb1")->delimiter(',')->expected(4);
  }

  std::pair<BipartiteBox, std::string> load() const {
    int chosen = !file.empty() + pr + uniform + copy + !deterministic.empty();
    if (chosen != 1) throw InvalidInput("choose exactly one box source (--in/--box FILE, --pr, --uniform, --copy, --deterministic)");
    if (pr) return {pr_box(), "pr"};
    if (uniform) return {uniform_box(), "uniform"};
    if (copy) return {input_copy_box(), "copy"};
    if (!deterministic.empty()) {
      std::ostringstream id;
      id << "deterministic:" << deterministic[0] << deterministic[1] << deterministic[2] << deterministic[3];
      return {deterministic_box({deterministic[0], deterministic[1]}, {deterministic[2], deterministic[3]}), id.str()};
    }
    return {box_from_json(read_json_file(file)), file};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json witness_json(const OptimizationWitness& w) {
  if (const auto* s = std::get_if<ClassicalStrategy>(&w))
    return Json{{"kind", "classical"}, {"fa", {s->fa[0], s->fa[1]}}, {"fb", {s->fb[0], s->fb[1]}}};
  if (const auto* box = std::get_if<BipartiteBox>(&w)) {
    Json j = box_to_json(*box);
    j["kind"] = "box";
    return j;
  }
  const auto& q = std::get<QuantumWitness>(w);
  return Json{{"kind", "quantum"},
              {"A0", matrix_to_json(q.alice[0].matrix())},
              {"A1", matrix_to_json(q.alice[1].matrix())},
              {"B0", matrix_to_json(q.bob[0].matrix())},
              {"B1", matrix_to_json(q.bob[1].matrix())},
              {"state", state_to_json(q.state)}};
}

Json report_json(const OptimizationReport& r) {
  Json j{{"value", r.value},
         {"iterations", r.iterations},
         {"converged", r.converged},
         {"stationary", r.stationary},
         {"witness", witness_json(r.witness)},
         {"trace", r.trace}};
  j["warning"] = r.warning ? Json(*r.warning) : Json(nullptr);
  return j;
}

Json ns_json(const NsResult& ns) {
  Json v = Json::array();
  for (const auto& e : ns.witness.violations)
    v.push_back(Json{{"party", to_string(e.party)},
                     {"output", e.output},
                     {"input", e.input},
                     {"other_inputs", {e.other_inputs[0], e.other_inputs[1]}},
                     {"gap", e.gap}});
  return Json{{"nonsignaling", ns.nonsignaling}, {"violations", v}};
}

Json homogeneity_json(const HomogeneityTest& t) {
  return Json{{"party", to_string(t.party)},
              {"input", t.input},
              {"counts", {{t.counts[0][0], t.counts[0][1]}, {t.counts[1][0], t.counts[1][1]}}},
              {"method", to_string(t.method)},
              {"statistic", t.statistic},
              {"p_value", t.p_value},
              {"adjusted_p_value", t.adjusted_p_value},
              {"reject", t.reject}};
}

Json autocorr_json(const Autocorrelation& a) {
  return Json{{"value", optional_number(a.value)}, {"std_error", a.std_error}, {"note", a.note}};
}

Json probability_json(const ProbabilityResult& r) {
  if (r.defined()) return Json{{"defined", true}, {"value", *r.value}};
  return Json{{"defined", false}, {"value", nullptr}, {"reason", r.reason}};
}

Json feasibility_json(const FeasibilityResult& r) {
  if (const auto* f = std::get_if<Feasible>(&r))
    return Json{{"verdict", "feasible"}, {"u", {f->u[0], f->u[1]}}, {"v", {f->v[0], f->v[1]}}, {"max_residual", f->max_residual}};
  const auto& inf = std::get<Infeasible>(r);
  return Json{{"verdict", "infeasible"},
              {"test", to_string(inf.test)},
              {"violating_value", inf.violating_value},
              {"detail", inf.detail}};
}

struct OpInputs {
  std::array<Observable, 4> obs;  // A0, A1, B0, B1 in +1/-1 form
  std::optional<QuantumState> state;
};

OpInputs load_op_inputs(const std::string& file) {
  if (file.empty()) {
    QuantumSetup s = optimal_qubit_setup();
    return {{s.alice[0], s.alice[1], s.bob[0], s.bob[1]}, s.state};
  }
  Json j = read_json_file(file);
  const std::string form = j.value("form", std::string("signed"));
  if (form != "signed" && form != "zero_one") throw InvalidInput("\"form\" must be signed or zero_one");
  auto get = [&](const char* key) {
    if (!j.contains(key)) throw InvalidInput(std::string("operator file lacks \"") + key + "\"");
    Observable o = observable_from_json(j[key]);
    return form == "zero_one" ? o.to_signed() : o;
  };
  OpInputs in{{get("A0"), get("A1"), get("B0"), get("B1")}, std::nullopt};
  if (j.contains("state")) in.state = state_from_json(j["state"]);
  return in;
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, delim))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult result;
  Globals g;
  CLI::App app{"boxlab: bipartite correlation boxes, CHSH bounds and their certificates", "boxlab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "Seed for stochastic commands");
  app.add_option("--tol", g.tol, "Tolerance for structural checks");
  app.add_option("--out", g.out, "Write the JSON payload (or JSONL transcript) to FILE");
  app.add_flag("--json", g.json, "Print the JSON payload instead of a summary");

  // The handler fills the payload and a one-line summary.
  std::function<void()> handler;
  std::ostringstream text;

  // box
  auto* box_cmd = app.add_subcommand("box", "Construct and check boxes")->require_subcommand(1);
  BoxSource box_src;
  std::string valuation_name = "signed";
  std::vector<double> table;
  auto* box_new = box_cmd->add_subcommand("new", "Emit a box as JSON");
  box_src.attach(box_new);
  box_new->add_option("--table", table, "16 entries in [x][y][a][b] order")->delimiter(',')->expected(16);
  box_new->callback([&] {
    handler = [&] {
      BipartiteBox box = table.empty() ? box_src.load().first : [&] {
        BipartiteBox::Table t{};
        std::copy(table.begin(), table.end(), t.begin());
        return new_box(t);
      }();
      result.payload = box_to_json(box);
      text << canonical_dump(result.payload) << '\n';
    };
  });
  auto* box_check = box_cmd->add_subcommand("check", "Validate, test non-signaling and sequential symmetry");
  box_src.attach(box_check);
  box_check->callback([&] {
    handler = [&] {
      auto [box, id] = box_src.load();
      NsResult ns = is_nonsignaling(box, g.tol);
      SymmetryResult sym = sequential_symmetry_check(box, g.tol);
      result.payload = ns_json(ns);
      result.payload["box"] = id;
      result.payload["normalized"] = true;
      result.payload["sequential_symmetry"] = Json{{"holds", sym.holds}, {"max_residual", sym.max_residual}};
      if (!ns.nonsignaling) result.status = Status::Violation;
      text << "nonsignaling: " << (ns.nonsignaling ? "yes" : "no") << " (" << ns.witness.violations.size()
           << " violations), sequential symmetry residual " << fmt(sym.max_residual) << '\n';
    };
  });
  auto* box_chsh = box_cmd->add_subcommand("chsh", "CHSH value C00 + C01 + C10 - C11");
  box_src.attach(box_chsh);
  box_chsh->add_option("--valuation", valuation_name, "signed or raw")->check(CLI::IsMember({"signed", "raw"}));
  box_chsh->callback([&] {
    handler = [&] {
      auto [box, id] = box_src.load();
      Valuation v = parse_valuation(valuation_name);
      Json corr = Json::array();
      for (int x = 0; x < 2; ++x) corr.push_back({correlator(box, x, 0, v), correlator(box, x, 1, v)});
      const double value = chsh(box, v);
      result.payload = Json{{"box", id}, {"valuation", to_string(v)}, {"value", value}, {"correlators", corr}};
      text << "chsh (" << to_string(v) << ") = " << fmt(value) << '\n';
    };
  });
  auto* box_marg = box_cmd->add_subcommand("marginals", "All single-party marginals");
  box_src.attach(box_marg);
  box_marg->callback([&] {
    handler = [&] {
      auto [box, id] = box_src.load();
      Json alice = Json::array(), bob = Json::array();
      for (int in = 0; in < 2; ++in)
        for (int out = 0; out < 2; ++out) {
          alice.push_back(Json{{"x", in},
                               {"a", out},
                               {"given_y0", marginal_a(box, out, in, 0)},
                               {"given_y1", marginal_a(box, out, in, 1)},
                               {"average", marginal_a(box, out, in)}});
          bob.push_back(Json{{"y", in},
                             {"b", out},
                             {"given_x0", marginal_b(box, out, in, 0)},
                             {"given_x1", marginal_b(box, out, in, 1)},
                             {"average", marginal_b(box, out, in)}});
        }
      result.payload = Json{{"box", id}, {"alice", alice}, {"bob", bob}};
      for (const auto& m : alice)
        text << "P(a=" << m["a"] << "|x=" << m["x"] << ") = " << fmt(m["average"].get<double>()) << '\n';
      for (const auto& m : bob)
        text << "P(b=" << m["b"] << "|y=" << m["y"] << ") = " << fmt(m["average"].get<double>()) << '\n';
    };
  });

  // op
  auto* op_cmd = app.add_subcommand("op", "Operator-level checks")->require_subcommand(1);
  std::string op_file;
  auto* op_landau = op_cmd->add_subcommand("landau", "Landau operator identity and PSD margin");
  auto* op_tsirelson = op_cmd->add_subcommand("tsirelson", "|<C>| against 2 sqrt(2)");
  auto* op_born = op_cmd->add_subcommand("born", "Born-rule box from projective measurements");
  for (auto* sub : {op_landau, op_tsirelson, op_born})
    sub->add_option("--file", op_file, "Operator JSON (defaults to the optimal qubit configuration)");
  op_landau->callback([&] {
    handler = [&] {
      OpInputs in = load_op_inputs(op_file);
      LandauResult r = landau_check(in.obs[0], in.obs[1], in.obs[2], in.obs[3]);
      result.payload = Json{{"identity_residual", r.identity_residual},
                            {"psd_margin", r.psd_margin},
                            {"mirror_identity_residual", r.mirror_identity_residual},
                            {"mirror_psd_margin", r.mirror_psd_margin},
                            {"convention", "4I + [A0,A1] (x) [B1,B0] - C^2"}};
      if (r.psd_margin < -g.tol || r.mirror_psd_margin < -g.tol) result.status = Status::Violation;
      text << "identity residual " << fmt(r.identity_residual) << ", psd margin " << fmt(r.psd_margin) << '\n';
    };
  });
  op_tsirelson->callback([&] {
    handler = [&] {
      OpInputs in = load_op_inputs(op_file);
      if (!in.state) throw InvalidInput("tsirelson needs a \"state\"");
      result.payload = Json{{"bound", kTsirelsonBound}};
      try {
        const double v = tsirelson_check(in.obs[0], in.obs[1], in.obs[2], in.obs[3], *in.state);
        result.payload["value"] = v;
        result.payload["within_bound"] = true;
        text << "|<C>| = " << fmt(v) << " <= 2 sqrt(2)\n";
      } catch (const BoundViolation& e) {
        result.payload["within_bound"] = false;
        result.payload["error"] = e.what();
        result.status = Status::Violation;
        text << e.what() << '\n';
      }
    };
  });
  op_born->callback([&] {
    handler = [&] {
      OpInputs in = load_op_inputs(op_file);
      if (!in.state) throw InvalidInput("born needs a \"state\"");
      BipartiteBox box = box_from_quantum(*in.state, {measurement_from_signed(in.obs[0]), measurement_from_signed(in.obs[1])},
                                          {measurement_from_signed(in.obs[2]), measurement_from_signed(in.obs[3])});
      NsResult ns = is_nonsignaling(box, g.tol);
      result.payload = Json{{"box", box_to_json(box)}, {"chsh", chsh(box)}, {"nonsignaling", ns.nonsignaling}};
      if (!ns.nonsignaling) result.status = Status::Violation;
      text << "born box chsh = " << fmt(chsh(box)) << '\n';
    };
  });

  // opt
  auto* opt_cmd = app.add_subcommand("opt", "CHSH maxima: classical, quantum, non-signaling")->require_subcommand(1);
  SeesawOptions seesaw;
  std::string functional_name = "chsh";
  std::optional<int> cut;
  auto* opt_classical = opt_cmd->add_subcommand("classical", "Enumerate the 16 local deterministic strategies");
  auto* opt_quantum = opt_cmd->add_subcommand("quantum", "Seesaw over +1/-1 observables and states");
  opt_quantum->add_option("--dim", seesaw.dim, "Local dimension (2..8)");
  opt_quantum->add_option("--restarts", seesaw.restarts, "Independent random restarts");
  opt_quantum->add_option("--max-iters", seesaw.max_iters, "Iteration cap per restart");
  opt_quantum->add_flag("--identity-start", seesaw.identity_start, "Start from all-identity observables");
  auto* opt_ns = opt_cmd->add_subcommand("ns", "Exact LP over the non-signaling polytope");
  opt_ns->add_option("--functional", functional_name, "chsh or all-plus")->check(CLI::IsMember({"chsh", "all-plus"}));
  opt_ns->add_option("--cut", cut, "Add the constraint |chsh| <= CUT");
  auto finish_opt = [&](const OptimizationReport& r, const char* what) {
    result.payload = report_json(r);
    result.payload["optimizer"] = what;
    text << what << " max = " << fmt(r.value) << (r.converged ? "" : " (not converged)")
         << (r.stationary ? " (stationary start)" : "") << '\n';
    if (r.warning) text << "warning: " << *r.warning << '\n';
  };
  opt_classical->callback([&] { handler = [&] { finish_opt(classical_max(), "classical"); }; });
  opt_quantum->callback([&] {
    handler = [&] {
      seesaw.seed = g.seed;
      finish_opt(seesaw_quantum_max(seesaw), "quantum");
    };
  });
  opt_ns->callback([&] {
    handler = [&] {
      BellFunctional f = functional_name == "all-plus" ? BellFunctional::AllPlus : BellFunctional::Chsh;
      finish_opt(nonsignaling_max(f, cut), "nonsignaling");
      result.payload["functional"] = functional_name;
    };
  });

  // game
  auto* game_cmd = app.add_subcommand("game", "Monte Carlo Bell game")->require_subcommand(1);
  BoxSource game_src;
  std::uint64_t rounds = 10000;
  std::string transcript_in, tests_list = "signaling,independence,correlators";
  double significance = 0.05;
  auto* game_play = game_cmd->add_subcommand("play", "Play rounds and write a JSONL transcript");
  game_src.attach(game_play, "--box");
  game_play->add_option("--rounds", rounds, "Number of rounds")->check(CLI::PositiveNumber);
  game_play->callback([&] {
    handler = [&] {
      auto [box, id] = game_src.load();
      GameTranscript tr = play(box, rounds, g.seed, id);
      std::ostringstream jsonl;
      write_transcript(jsonl, tr);
      result.payload = Json{{"box_id", id}, {"rounds", rounds}, {"seed", g.seed}};
      if (g.out.empty()) {
        text << jsonl.str();
      } else {
        write_out(g.out, jsonl.str());
        text << "wrote " << rounds << " rounds to " << g.out << '\n';
      }
    };
  });
  auto* game_analyze = game_cmd->add_subcommand("analyze", "Statistical tests on a transcript");
  game_analyze->add_option("--in", transcript_in, "Transcript JSONL")->required();
  game_analyze->add_option("--tests", tests_list, "Comma list of signaling,independence,correlators");
  game_analyze->add_option("--significance", significance, "Family-wise level for the signaling test");
  game_analyze->add_option("--valuation", valuation_name, "signed or raw")->check(CLI::IsMember({"signed", "raw"}));
  game_analyze->callback([&] {
    handler = [&] {
      std::ifstream in(transcript_in);
      if (!in) throw InvalidInput("cannot open " + transcript_in);
      GameTranscript tr = read_transcript(in);
      Valuation v = parse_valuation(valuation_name);
      result.payload = Json{{"rounds", tr.rounds.size()}, {"box_id", tr.box_id}, {"seed", tr.seed}};
      for (const auto& name : split(tests_list, ',')) {
        if (name == "signaling") {
          SignalingReport s = signaling_test(tr, significance);
          Json tests = Json::array();
          for (const auto& t : s.tests) tests.push_back(homogeneity_json(t));
          result.payload["signaling"] =
              Json{{"tests", tests}, {"significance", s.significance}, {"min_adjusted_p", s.min_adjusted_p}, {"reject", s.reject}};
          if (s.reject) result.status = Status::Violation;
          text << "signaling: " << (s.reject ? "rejected" : "not rejected") << " (min adjusted p "
               << fmt(s.min_adjusted_p) << ")\n";
        } else if (name == "independence") {
          IndependenceReport r = independence_test(tr, v);
          Json cond = Json::array();
          for (const auto& c : r.conditionals)
            cond.push_back(Json{{"party", to_string(c.party)},
                                {"input", c.input},
                                {"output", c.output},
                                {"prev_input", c.prev_input},
                                {"prev_output", c.prev_output},
                                {"count", c.count},
                                {"conditional", c.conditional},
                                {"marginal", c.marginal},
                                {"z", c.z}});
          result.payload["independence"] = Json{{"alice", autocorr_json(r.alice)},
                                                {"bob", autocorr_json(r.bob)},
                                                {"product", autocorr_json(r.product)},
                                                {"conditionals", cond},
                                                {"max_abs_z", r.max_abs_z},
                                                {"dependent", r.dependent}};
          if (r.dependent) result.status = Status::Violation;
          text << "independence: " << (r.dependent ? "lag-1 dependence detected" : "no lag-1 dependence") << '\n';
        } else if (name == "correlators") {
          CorrelatorReport c = estimate_correlators(tr, v);
          Json cells = Json::array();
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
              cells.push_back(Json{{"x", x},
                                   {"y", y},
                                   {"mean", c.cells[x][y].mean},
                                   {"std_error", c.cells[x][y].std_error},
                                   {"count", c.cells[x][y].count}});
          result.payload["correlators"] = Json{{"cells", cells}, {"chsh", c.chsh}, {"chsh_std_error", c.chsh_std_error}};
          text << "chsh estimate " << fmt(c.chsh) << " +- " << fmt(c.chsh_std_error) << '\n';
        } else {
          throw InvalidInput("unknown test '" + name + "'");
        }
      }
    };
  });

  // toy
  auto* toy_cmd = app.add_subcommand("toy", "Angle-correlation toy model and its factorization system")->require_subcommand(1);
  std::vector<double> targets;
  auto* toy_report = toy_cmd->add_subcommand("report", "Inconsistency certificate for a product state");
  auto* toy_feas = toy_cmd->add_subcommand("feasibility", "Solve u_i v_j = t_ij with bounded factors");
  toy_feas->add_option("--targets", targets, "t00,t01,t10,t11")->delimiter(',')->expected(4)->required();
  toy_report->callback([&] {
    handler = [&] {
      InconsistencyReport r = product_state_inconsistency_report();
      Json eqs = Json::array();
      Json tv = Json::array();
      for (const auto& e : r.equations) {
        eqs.push_back(Json{{"label", e.label}, {"alice_angle", e.alice_angle}, {"bob_angle", e.bob_angle}, {"target", e.target}});
        tv.push_back(e.target);
      }
      result.payload = feasibility_json(r.result);
      result.payload["equations"] = eqs;
      result.payload["targets"] = tv;
      result.payload["argument"] = r.argument;
      result.payload["chsh"] = chsh_from_model(pr_toy_model());
      text << "toy model chsh = " << fmt(chsh_from_model(pr_toy_model())) << "; product-state system is "
           << result.payload["verdict"].get<std::string>() << '\n';
      for (const auto& line : r.argument) text << "  " << line << '\n';
    };
  });
  toy_feas->callback([&] {
    handler = [&] {
      FeasibilitySystem sys(Targets{{{targets[0], targets[1]}, {targets[2], targets[3]}}});
      FeasibilityResult r = separable_feasibility(sys, g.tol);
      result.payload = feasibility_json(r);
      result.payload["targets"] = targets;
      if (std::holds_alternative<Infeasible>(r)) result.status = Status::Violation;
      text << result.payload["verdict"].get<std::string>() << '\n';
    };
  });

  // logic
  auto* logic_cmd = app.add_subcommand("logic", "Propositions over incompatible actions")->require_subcommand(1);
  BoxSource logic_src;
  std::string expr;
  auto* logic_demo = logic_cmd->add_subcommand("demo", "Distributivity counterexample");
  logic_src.attach(logic_demo, "--box");
  auto* logic_eval = logic_cmd->add_subcommand("eval", "Probability of a proposition");
  logic_src.attach(logic_eval, "--box");
  logic_eval->add_option("--expr", expr, "e.g. and(A:0=0@1, or(A:1=0@1, A:1=1@1))")->required();
  logic_demo->callback([&] {
    handler = [&] {
      auto [box, id] = logic_src.load();
      DistributivityReport r = distributivity_counterexample(box);
      result.payload = Json{{"box", id},
                            {"phi", r.phi.to_string()},
                            {"phi_prime", r.phi_prime.to_string()},
                            {"p_phi", probability_json(r.p_phi)},
                            {"p_phi_prime", probability_json(r.p_phi_prime)}};
      text << "P[" << r.phi.to_string() << "] = " << (r.p_phi.defined() ? fmt(*r.p_phi.value) : "undefined") << '\n'
           << "P[" << r.phi_prime.to_string() << "] = "
           << (r.p_phi_prime.defined() ? fmt(*r.p_phi_prime.value) : "undefined (" + r.p_phi_prime.reason + ")")
           << '\n';
    };
  });
  logic_eval->callback([&] {
    handler = [&] {
      auto [box, id] = logic_src.load();
      Proposition p = parse_proposition(expr);
      ProbabilityResult r = probability(p, box);
      result.payload = probability_json(r);
      result.payload["proposition"] = p.to_string();
      result.payload["box"] = id;
      text << "P[" << p.to_string() << "] = " << (r.defined() ? fmt(*r.value) : "undefined (" + r.reason + ")") << '\n';
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!handler) throw InvalidInput("no command selected");
    handler();
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::Error;
    result.err = std::string("usage error: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    result.status = Status::Error;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  const bool is_play = game_play->parsed();
  if (!g.out.empty() && !is_play) {
    try {
      write_out(g.out, canonical_dump(result.payload) + "\n");
    } catch (const std::exception& e) {
      result.status = Status::Error;
      result.err = std::string("error: ") + e.what() + "\n";
      return result;
    }
  }
  result.out = (g.json && !(is_play && g.out.empty())) ? canonical_dump(result.payload) + "\n" : text.str();
  return result;
}

}  // namespace boxlab::cli
