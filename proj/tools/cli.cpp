#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "awarekit/axiomatics.hpp"
#include "awarekit/contracts.hpp"
#include "awarekit/error.hpp"
#include "awarekit/model_io.hpp"
#include "awarekit/oracle.hpp"
#include "awarekit/parser.hpp"
#include "awarekit/semantics.hpp"
#include "awarekit/utility.hpp"
#include "json.hpp"

namespace awarekit::cli {

namespace {

using json = nlohmann::json;

struct Budget {
  EnumerationBudget enumeration;
  EvalOptions eval;
};

// "size=5,modal=2,quant=1,predquant=0,nesting=2,preds=4"
Budget parse_budget(const std::string& text) {
  Budget b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("BadBudget", "expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1 || v < 0) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("BadBudget", "bad value in '" + item + "'");
    }
    if (key == "size") {
      b.enumeration.max_size = static_cast<std::size_t>(v);
    } else if (key == "modal") {
      b.enumeration.max_modal_depth = v;
    } else if (key == "quant") {
      b.enumeration.max_quantifier_nesting = v;
    } else if (key == "predquant") {
      b.enumeration.max_pred_quantifier_nesting = v;
    } else if (key == "nesting") {
      b.eval.max_pred_nesting = v;
    } else if (key == "preds") {
      b.eval.max_preds = static_cast<std::size_t>(v);
    } else {
      throw Error("BadBudget", "unknown key '" + key + "'");
    }
  }
  return b;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string ok_fail(bool b) { return b ? "ok" : "FAIL"; }

json pair_json(const Pair& p) { return json::array({p.first, p.second}); }
std::string pair_text(const Pair& p) { return "(" + p.first + ", " + p.second + ")"; }

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

struct Common {
  bool as_json = false;
  bool timing = false;
  bool allow_trivial = false;
};

// One command's output: JSON report plus its human rendering.
struct Report {
  json j = json::object();
  std::vector<std::string> lines;
  int code = kOk;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, Budget budget) : out_(out), err_(err), budget_(std::move(budget)) {}

  int execute(const std::string& name, const Common& common, const std::function<Report()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
      r = body();
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      if (common.as_json) {
        json j{{"command", name}, {"error", {{"code", e.code()}, {"detail", e.what()}}}};
        out_ << j.dump(2) << "\n";
      }
      return kError;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (common.as_json) {
      r.j["command"] = name;
      if (common.timing) r.j["elapsed_ms"] = ms;
      out_ << r.j.dump(2) << "\n";
    } else {
      for (const auto& l : r.lines) out_ << l << "\n";
      if (common.timing) out_ << "time: " << ms << " ms\n";
    }
    return r.code;
  }

  EvalOptions eval_options(const Common& c) const {
    EvalOptions o = budget_.eval;
    o.allow_trivial = c.allow_trivial;
    return o;
  }
  const EnumerationBudget& enumeration() const { return budget_.enumeration; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  Budget budget_;
};

Report cmd_check(Runner& rn, const Common& c, const std::string& model_path, const std::string& state,
                 const std::string& formula, const std::string& formula_file) {
  Model m = load_model(model_path);
  if (formula.empty() == formula_file.empty()) {
    throw Error("Usage", "give exactly one of --formula and --formula-file");
  }
  const std::string text = formula.empty() ? trim(read_file(formula_file)) : formula;
  Formula f = parse(text, m.sig);
  const StateId w = m.state_index(state);
  Evaluator ev(m, rn.eval_options(c));
  const bool v = ev.sat(w, f);
  const bool lang = in_language(f, m.language[w]);
  Report r;
  r.j["model"] = model_path;
  r.j["state"] = state;
  r.j["formula"] = render_pretty(f);
  r.j["verdict"] = v;
  r.j["in_language"] = lang;
  std::string aware = "aware:";
  for (int i = 1; i <= m.sig.agents; ++i) {
    bool a = in_language(f, m.aware(i, w));
    r.j["aware"][std::to_string(i)] = a;
    aware += std::string(i > 1 ? "," : "") + " agent " + std::to_string(i) + " " + yes_no(a);
  }
  r.lines.push_back(state + ": " + (v ? "true" : "false"));
  r.lines.push_back("in language: " + yes_no(lang));
  r.lines.push_back(aware);
  r.code = v ? kOk : kNegative;
  return r;
}

Report cmd_validate(const std::string& model_path) {
  Model m = load_model(model_path, LoadOptions{false});
  auto viol = awareness_constancy_violations(m);
  Report r;
  r.j["model"] = model_path;
  r.j["ok"] = viol.empty();
  r.j["violations"] = json::array();
  for (const auto& v : viol) {
    r.j["violations"].push_back({{"agent", v.agent}, {"w1", m.states[v.w1]}, {"w2", m.states[v.w2]}});
    r.lines.push_back("awareness not constant: agent " + std::to_string(v.agent) + ", " + m.states[v.w1] +
                      " vs " + m.states[v.w2]);
  }
  r.lines.insert(r.lines.begin(), std::string("model: ") + (viol.empty() ? "ok" : "invalid"));
  r.code = viol.empty() ? kOk : kNegative;
  return r;
}

Report cmd_audit(const std::string& model_path) {
  Model m = load_model(model_path);
  m.require_economy();
  Report r;
  r.j["model"] = model_path;
  bool all = true;
  for (Assumption a : {Assumption::kA1, Assumption::kA2, Assumption::kA3, Assumption::kA1Strong}) {
    auto w = check_assumption(m, a);
    const std::string name = assumption_name(a);
    json e{{"ok", !w.has_value()}};
    if (!w) {
      r.lines.push_back(name + ": ok");
    } else {
      e["witness"] = {{"agent", w->agent},  {"w1", m.states[w->w1]}, {"d1", w->d1},
                      {"u1", to_string(w->u1)}, {"w2", m.states[w->w2]}, {"d2", w->d2},
                      {"u2", to_string(w->u2)}};
      r.lines.push_back(name + ": violated (agent " + std::to_string(w->agent) + ": U(" + m.states[w->w1] + ", " +
                        w->d1 + ") = " + to_string(w->u1) + " but U(" + m.states[w->w2] + ", " + w->d2 +
                        ") = " + to_string(w->u2) + ")");
      if (a != Assumption::kA1Strong) all = false;
    }
    r.j["assumptions"][name] = e;
  }
  r.j["ok"] = all;
  r.code = all ? kOk : kNegative;
  return r;
}

struct VerifyChecks {
  json j = json::object();
  std::vector<std::string> lines;
  bool ok = true;
};

void add_check(VerifyChecks& v, const std::string& name, bool ok, const std::string& detail = {}) {
  v.j[name] = {{"ok", ok}};
  if (!detail.empty()) v.j[name]["detail"] = detail;
  v.lines.push_back(name + ": " + ok_fail(ok) + (detail.empty() ? "" : " (" + detail + ")"));
  v.ok = v.ok && ok;
}

VerifyChecks verify_at(Evaluator& ev, const Contract& k, StateId w, const AcceptOptions& acc) {
  const Model& m = ev.model();
  VerifyChecks v;
  auto val = validate_contract(ev, k);
  std::string detail;
  if (!val.ok) {
    detail = "condition " + std::to_string(val.failed_condition) + " fails at " + m.states[*val.state];
  } else if (val.vacuous) {
    detail = "vacuous";
  }
  add_check(v, "conditions", val.ok, detail);
  add_check(v, "articulable", is_articulable(m, k, w));
  try {
    Pair o = outcome(ev, k, w);
    v.j["outcome"] = pair_json(o);
    v.lines.push_back("outcome at " + m.states[w] + ": " + pair_text(o));
    auto dom = is_efficient_at(ev, k, w);
    add_check(v, "efficient", !dom, dom ? "dominated by " + pair_text(*dom) : "");
    for (int i = 1; i <= 2; ++i) {
      auto bad = is_acceptable_at(ev, k, w, i, acc);
      add_check(v, "acceptable(" + std::to_string(i) + ")", !bad, bad ? "fails at " + m.states[*bad] : "");
    }
  } catch (const Error& e) {
    add_check(v, "outcome", false, e.what());
  }
  return v;
}

Report cmd_contract_verify(Runner& rn, const Common& c, const std::string& model_path, const std::string& contract_path,
                           const std::string& at, bool at_omega) {
  Model m = load_model(model_path);
  m.require_economy();
  Contract k = contract_from_json(read_file(contract_path), m.sig);
  check_contract_shape(m, k);
  const StateId w = m.state_index(at);
  Evaluator ev(m, rn.eval_options(c));
  VerifyChecks v = verify_at(ev, k, w, AcceptOptions{at_omega});
  Report r;
  r.j["model"] = model_path;
  r.j["contract"] = contract_path;
  r.j["at"] = at;
  r.j["acceptability_at_omega"] = at_omega;
  r.j["checks"] = v.j;
  json outcomes = json::object();
  for (StateId s = 0; s < m.num_states(); ++s) {
    try {
      outcomes[m.states[s]] = pair_json(outcome(ev, k, s));
    } catch (const Error& e) {
      outcomes[m.states[s]] = e.code();
    }
  }
  r.j["outcomes"] = outcomes;
  r.j["ok"] = v.ok;
  r.lines = v.lines;
  r.lines.push_back(std::string("verdict: ") + (v.ok ? "ok" : "FAIL"));
  r.code = v.ok ? kOk : kNegative;
  return r;
}

Mode parse_mode(const std::string& s) {
  if (s == "full") return Mode::kFull;
  if (s == "bc") return Mode::kBc;
  throw Error("Usage", "--mode is full or bc");
}

Report cmd_contract_synthesize(Runner& rn, const Common& c, const std::string& model_path, const std::string& at,
                               const std::string& mode, const std::string& out_path) {
  Model m = load_model(model_path);
  m.require_economy();
  const StateId w = m.state_index(at);
  Evaluator ev(m, rn.eval_options(c));
  SynthesisResult s = synthesize(ev, w, parse_mode(mode));
  const std::string text = contract_to_json(s.contract);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error("IoError", "cannot write " + out_path);
    f << text;
  }
  VerifyChecks v = verify_at(ev, s.contract, w, {});
  Report r;
  r.j["model"] = model_path;
  r.j["at"] = at;
  r.j["mode"] = mode;
  r.j["contract"] = json::parse(text);
  json cells = json::array();
  for (std::size_t i = 0; i < s.partition.cells.size(); ++i) {
    json names = json::array();
    for (StateId x : s.partition.cells[i]) names.push_back(m.states[x]);
    cells.push_back({{"states", names}, {"outcome", pair_json(s.cell_outcome[i])}});
  }
  r.j["cells"] = cells;
  r.j["checks"] = v.j;
  bool ok = v.ok;
  std::string t1b;
  try {
    Theorem1bReport rep = verify_theorem1b(ev, w, s.contract);
    r.j["all_states"] = {{"ok", rep.ok}};
    if (!rep.ok) {
      r.j["all_states"]["state"] = m.states[*rep.state];
      r.j["all_states"]["check"] = rep.check;
    }
    t1b = rep.ok ? "ok" : "FAIL (" + rep.check + " at " + m.states[*rep.state] + ")";
    ok = ok && rep.ok;
  } catch (const Error& e) {
    if (e.code() != "PreconditionFails") throw;
    r.j["all_states"] = {{"skipped", e.what()}};
    t1b = "skipped (awareness varies on the considered states)";
  }
  r.j["ok"] = ok;
  if (out_path.empty()) {
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) r.lines.push_back(l);
  } else {
    r.lines.push_back("contract written to " + out_path);
  }
  for (std::size_t i = 0; i < s.partition.cells.size(); ++i) {
    std::string names;
    for (StateId x : s.partition.cells[i]) names += (names.empty() ? "" : ",") + m.states[x];
    r.lines.push_back("cell {" + names + "} -> " + pair_text(s.cell_outcome[i]));
  }
  for (const auto& l : v.lines) r.lines.push_back(l);
  r.lines.push_back("every considered state: " + t1b);
  r.code = ok ? kOk : kNegative;
  return r;
}

Report cmd_prove(const std::string& proof_path, const std::string& sig_path) {
  ProofContext ctx = proof_context_from_json(read_file(sig_path));
  ProofCheck pc = check_proof_json(read_file(proof_path), ctx);
  Report r;
  r.j["proof"] = proof_path;
  r.j["ok"] = pc.ok;
  if (pc.ok) {
    r.lines.push_back("proof: ok");
    r.code = kOk;
  } else {
    r.j["line"] = pc.line;
    r.j["reason"] = pc.reason;
    r.j["detail"] = pc.detail;
    r.lines.push_back("proof: rejected at line " + std::to_string(pc.line) + ": " + pc.reason + " (" + pc.detail + ")");
    r.code = pc.reason == "BadProofFile" || pc.reason == "ParseError" ? kError : kNegative;
  }
  return r;
}

LanguageSlice common_awareness(const Model& m, StateId w) {
  LanguageSlice s = m.aware(1, w);
  for (int i = 2; i <= m.sig.agents; ++i) s = s.intersect(m.aware(i, w));
  return s;
}

Report cmd_distinguish(Runner& rn, const Common& c, const std::string& model_path,
                       const std::vector<std::string>& states, const std::string& at) {
  Model m = load_model(model_path);
  if (states.size() != 2) throw Error("Usage", "--states takes two state names");
  const StateId a = m.state_index(states[0]);
  const StateId b = m.state_index(states[1]);
  const StateId w = at.empty() ? a : m.state_index(at);
  Evaluator ev(m, rn.eval_options(c));
  LanguageSlice slice = common_awareness(m, w);
  auto f = distinguish(ev, a, b, slice, rn.enumeration());
  Report r;
  r.j["model"] = model_path;
  r.j["states"] = states;
  r.j["slice"] = {{"predicates", slice.predicates}, {"concepts", slice.concepts}};
  const auto& bud = rn.enumeration();
  r.j["budget"] = {{"size", bud.max_size},
                   {"modal", bud.max_modal_depth},
                   {"quant", bud.max_quantifier_nesting},
                   {"predquant", bud.max_pred_quantifier_nesting}};
  if (f) {
    r.j["sentence"] = render_pretty(*f);
    r.j["found"] = true;
    r.lines.push_back("distinguished by: " + render_pretty(*f));
    r.lines.push_back(states[0] + ": " + (ev.sat(a, *f) ? "true" : "false") + ", " + states[1] + ": " +
                      (ev.sat(b, *f) ? "true" : "false"));
    r.code = kOk;
  } else {
    r.j["found"] = false;
    r.lines.push_back("no distinguishing sentence within budget (inconclusive)");
    r.code = kNegative;
  }
  return r;
}

Report cmd_search(Runner& rn, const Common& c, const std::string& model_path, const std::string& at,
                  const std::string& mode) {
  Model m = load_model(model_path);
  m.require_economy();
  const StateId w = m.state_index(at);
  Evaluator ev(m, rn.eval_options(c));
  LanguageSlice slice = common_awareness(m, w);
  CellPartition cells = basis_partition_slice(ev, slice, union_of_cells(m, w), parse_mode(mode));
  SearchResult sr = exhaustive_contract_search(m, w, cells);
  Report r;
  r.j["model"] = model_path;
  r.j["at"] = at;
  r.j["mode"] = mode;
  json cj = json::array();
  for (const auto& cell : cells.cells) {
    json names = json::array();
    for (StateId x : cell) names.push_back(m.states[x]);
    cj.push_back(names);
  }
  r.j["cells"] = cj;
  r.j["assignments"] = sr.assignments;
  r.j["acceptable"] = sr.acceptable;
  r.j["acceptable_and_efficient"] = sr.acceptable_and_efficient;
  auto entry = [&](const SearchEntry& e) {
    json a = json::array();
    for (std::size_t idx : e.assignment) a.push_back(pair_json(sr.pairs[idx]));
    return json{{"assignment", a}, {"u1", to_string(e.u1)}, {"u2", to_string(e.u2)},
                {"efficient", e.efficient_at_star}};
  };
  json fr = json::array();
  for (const auto& e : sr.frontier) fr.push_back(entry(e));
  r.j["frontier"] = fr;
  r.lines.push_back("cells: " + std::to_string(cells.cells.size()) + ", assignments: " +
                    std::to_string(sr.assignments));
  r.lines.push_back("acceptable to both at " + at + ": " + std::to_string(sr.acceptable));
  r.lines.push_back("acceptable and efficient at " + at + ": " + std::to_string(sr.acceptable_and_efficient));
  for (const auto& e : sr.frontier) {
    std::string a;
    for (std::size_t idx : e.assignment) a += (a.empty() ? "" : " ") + pair_text(sr.pairs[idx]);
    r.lines.push_back("frontier: " + a + " u1=" + to_string(e.u1) + " u2=" + to_string(e.u2) +
                      (e.efficient_at_star ? " efficient" : ""));
  }
  r.code = sr.acceptable_and_efficient > 0 ? kOk : kNegative;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& budget_env) {
  Budget budget;
  try {
    budget = parse_budget(budget_env);
  } catch (const Error& e) {
    err << "error: AWAREKIT_BUDGET: " << e.what() << "\n";
    return kError;
  }
  Runner rn(out, err, budget);

  CLI::App app{"Partial-awareness logic toolkit"};
  app.name("awarekit");
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.as_json, "Emit a JSON report");
  app.add_flag("--timing", common.timing, "Include elapsed time in the report");
  app.add_flag("--allow-trivial-concepts", common.allow_trivial,
               "Admit the always-true/always-false combinations in predicate quantifiers");

  std::string model, state, formula, formula_file, contract_path, at, mode = "full", out_path, proof, sig;
  std::vector<std::string> states;
  bool at_omega = false;

  auto* check = app.add_subcommand("check", "Evaluate a sentence at a state");
  check->add_option("model", model, "Model file")->required();
  check->add_option("--state", state, "State name")->required();
  check->add_option("--formula", formula, "Sentence text");
  check->add_option("--formula-file", formula_file, "File holding the sentence");

  auto* validate = app.add_subcommand("validate", "Validate a model file");
  validate->add_option("model", model, "Model file")->required();

  auto* audit = app.add_subcommand("audit", "Check utility assumptions A1, A2, A3");
  audit->add_option("model", model, "Model file")->required();

  auto* contract = app.add_subcommand("contract", "Verify or synthesize contracts");
  contract->require_subcommand(1);
  auto* verify = contract->add_subcommand("verify", "Verify a contract at a state");
  verify->add_option("model", model, "Model file")->required();
  verify->add_option("--contract,--contract-path", contract_path, "Contract file")->required();
  verify->add_option("--at", at, "State")->required();
  verify->add_flag("--acceptability-at-omega", at_omega,
                   "Judge acceptability by the outcome at --at instead of at each considered state");
  auto* synth = contract->add_subcommand("synthesize", "Synthesize an optimal articulable contract");
  synth->add_option("model", model, "Model file")->required();
  synth->add_option("--at", at, "State")->required();
  synth->add_option("--mode", mode, "full or bc")->check(CLI::IsMember({"full", "bc"}));
  synth->add_option("--out", out_path, "Write the contract JSON here");

  auto* prove = app.add_subcommand("prove", "Check a Hilbert-style derivation");
  prove->add_option("proof", proof, "Proof file")->required();
  prove->add_option("--sig,--sig-path", sig, "Signature file")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference procedures");
  oracle->require_subcommand(1);
  auto* dist = oracle->add_subcommand("distinguish", "Search for a sentence separating two states");
  dist->add_option("model", model, "Model file")->required();
  dist->add_option("--states", states, "Two state names")->required()->expected(2);
  dist->add_option("--at", at, "State whose common awareness bounds the language (default: first state)");
  auto* search = oracle->add_subcommand("search", "Enumerate every cell-to-outcome assignment");
  search->add_option("model", model, "Model file")->required();
  search->add_option("--at", at, "State")->required();
  search->add_option("--mode", mode, "full or bc")->check(CLI::IsMember({"full", "bc"}));

  // Global flags are accepted after the subcommand too.
  for (auto* sub : {check, validate, audit, verify, synth, prove, dist, search}) sub->fallthrough();
  contract->fallthrough();
  oracle->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  if (*check) {
    return rn.execute("check", common, [&] { return cmd_check(rn, common, model, state, formula, formula_file); });
  }
  if (*validate) return rn.execute("validate", common, [&] { return cmd_validate(model); });
  if (*audit) return rn.execute("audit", common, [&] { return cmd_audit(model); });
  if (*verify) {
    return rn.execute("contract verify", common,
                      [&] { return cmd_contract_verify(rn, common, model, contract_path, at, at_omega); });
  }
  if (*synth) {
    return rn.execute("contract synthesize", common,
                      [&] { return cmd_contract_synthesize(rn, common, model, at, mode, out_path); });
  }
  if (*prove) return rn.execute("prove", common, [&] { return cmd_prove(proof, sig); });
  if (*dist) return rn.execute("oracle distinguish", common, [&] { return cmd_distinguish(rn, common, model, states, at); });
  if (*search) return rn.execute("oracle search", common, [&] { return cmd_search(rn, common, model, at, mode); });
  return kError;
}

}  // namespace awarekit::cli
