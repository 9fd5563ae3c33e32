#include "awarekit/axiomatics.hpp"

#include <algorithm>

#include "awarekit/bool_concept.hpp"
#include "awarekit/error.hpp"
#include "awarekit/parser.hpp"
#include "json.hpp"

namespace awarekit {

namespace {

using K = Formula::Kind;

struct Imp {
  Formula lhs;
  Formula rhs;
};

// a -> b is stored as !(a & !b).
std::optional<Imp> as_imp(const Formula& f) {
  if (f.kind() != K::kNot || f.body().kind() != K::kAnd) return std::nullopt;
  const Formula& c = f.body();
  if (c.rhs().kind() != K::kNot) return std::nullopt;
  return Imp{c.lhs(), c.rhs().body()};
}

// a <-> b is stored as (a -> b) & (b -> a).
std::optional<Imp> as_iff(const Formula& f) {
  if (f.kind() != K::kAnd) return std::nullopt;
  auto l = as_imp(f.lhs());
  auto r = as_imp(f.rhs());
  if (!l || !r || l->lhs != r->rhs || l->rhs != r->lhs) return std::nullopt;
  return l;
}

bool is_kind(const Formula& f, K k) { return f.kind() == k; }

bool is_pred_var_atom(const Formula& f, const std::string& var) {
  return f.kind() == K::kAtom && f.head().kind == HeadKind::kVariable && f.head().name == var;
}

// K_i phi -> phi and friends share the outer shape.
bool match_ka(const Formula& f) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kAware) || !is_kind(imp->rhs, K::kKnows)) return false;
  return imp->rhs.agent() == imp->lhs.agent() && imp->rhs.body() == imp->lhs;
}

bool match_k(const Formula& f) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kAnd) || !is_kind(imp->rhs, K::kKnows)) return false;
  const Formula& a = imp->lhs.lhs();
  const Formula& b = imp->lhs.rhs();
  if (!is_kind(a, K::kKnows) || !is_kind(b, K::kKnows)) return false;
  int i = a.agent();
  if (b.agent() != i || imp->rhs.agent() != i) return false;
  auto inner = as_imp(b.body());
  return inner && inner->lhs == a.body() && inner->rhs == imp->rhs.body();
}

bool match_t(const Formula& f) {
  auto imp = as_imp(f);
  return imp && is_kind(imp->lhs, K::kKnows) && imp->lhs.body() == imp->rhs;
}

bool match_4(const Formula& f) {
  auto imp = as_imp(f);
  return imp && is_kind(imp->lhs, K::kKnows) && is_kind(imp->rhs, K::kKnows) &&
         imp->rhs.agent() == imp->lhs.agent() && imp->rhs.body() == imp->lhs;
}

bool match_5(const Formula& f) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kAnd) || !is_kind(imp->rhs, K::kKnows)) return false;
  const Formula& nk = imp->lhs.lhs();
  const Formula& aw = imp->lhs.rhs();
  if (!is_kind(nk, K::kNot) || !is_kind(nk.body(), K::kKnows) || !is_kind(aw, K::kAware)) return false;
  int i = nk.body().agent();
  return aw.agent() == i && aw.body() == nk.body().body() && imp->rhs.agent() == i &&
         imp->rhs.body() == nk;
}

bool match_a0(const Formula& f) {
  auto imp = as_imp(f);
  return imp && is_kind(imp->lhs, K::kKnows) && is_kind(imp->rhs, K::kAware) &&
         imp->lhs.agent() == imp->rhs.agent() && imp->lhs.body() == imp->rhs.body();
}

bool match_con(const Formula& f) {
  // !forallp X. !forall x. (C(x) <-> X(x))
  if (!is_kind(f, K::kNot) || !is_kind(f.body(), K::kForAllPred)) return false;
  const std::string& X = f.body().var();
  const Formula& n = f.body().body();
  if (!is_kind(n, K::kNot) || !is_kind(n.body(), K::kForAllObj)) return false;
  const std::string& x = n.body().var();
  auto iff = as_iff(n.body().body());
  if (!iff) return false;
  const Formula& c = iff->lhs;
  const Formula& y = iff->rhs;
  return c.kind() == K::kAtom && c.head().kind == HeadKind::kConcept && c.arg() == ObjTerm::variable(x) &&
         is_pred_var_atom(y, X) && y.arg() == ObjTerm::variable(x);
}

bool match_1_forallx(const Formula& f, const ProofContext& ctx) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kForAllObj)) return false;
  for (const auto& c : ctx.sig.objects) {
    if (substitute_obj(imp->lhs.body(), imp->lhs.var(), ObjTerm::standard_name(c)) == imp->rhs) return true;
  }
  return false;
}

enum class Binding { kUnused, kBc, kConcept, kNone };

struct PredMatch {
  std::optional<Formula> bc_template;
  std::optional<std::string> concept_name;
  bool failed = false;
};

void match_pred_subst(const Formula& p, const Formula& q, const std::string& var, PredMatch& st) {
  if (st.failed) return;
  if (is_pred_var_atom(p, var)) {
    const ObjTerm& t = p.arg();
    if (q.kind() == K::kAtom && q.head().kind == HeadKind::kConcept && q.arg() == t) {
      if (st.bc_template || (st.concept_name && *st.concept_name != q.head().name)) st.failed = true;
      st.concept_name = q.head().name;
      return;
    }
    if (is_combination_over(q, t)) {
      Formula tmpl = to_template(q);
      if (st.concept_name || (st.bc_template && *st.bc_template != tmpl)) st.failed = true;
      st.bc_template = tmpl;
      return;
    }
    st.failed = true;
    return;
  }
  if (p.kind() != q.kind()) {
    st.failed = true;
    return;
  }
  switch (p.kind()) {
    case K::kAtom:
      if (p != q) st.failed = true;
      return;
    case K::kNot:
      match_pred_subst(p.body(), q.body(), var, st);
      return;
    case K::kAnd:
      match_pred_subst(p.lhs(), q.lhs(), var, st);
      match_pred_subst(p.rhs(), q.rhs(), var, st);
      return;
    case K::kForAllObj:
      if (p.var() != q.var()) {
        st.failed = true;
        return;
      }
      match_pred_subst(p.body(), q.body(), var, st);
      return;
    case K::kForAllPred:
      if (p.var() != q.var()) {
        st.failed = true;
        return;
      }
      if (p.var() == var) {
        if (p != q) st.failed = true;
        return;
      }
      match_pred_subst(p.body(), q.body(), var, st);
      return;
    case K::kAware:
    case K::kKnows:
      if (p.agent() != q.agent()) {
        st.failed = true;
        return;
      }
      match_pred_subst(p.body(), q.body(), var, st);
      return;
  }
}

Binding match_1_forallX(const Formula& f) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kForAllPred)) return Binding::kNone;
  PredMatch st;
  match_pred_subst(imp->lhs.body(), imp->rhs, imp->lhs.var(), st);
  if (st.failed) return Binding::kNone;
  if (st.bc_template) return Binding::kBc;
  if (st.concept_name) return Binding::kConcept;
  return Binding::kUnused;
}

bool match_k_forall(const Formula& f, K quant) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, quant)) return false;
  auto inner = as_imp(imp->lhs.body());
  auto outer = as_imp(imp->rhs);
  if (!inner || !outer) return false;
  const std::string& x = imp->lhs.var();
  return is_kind(outer->lhs, quant) && is_kind(outer->rhs, quant) && outer->lhs.var() == x &&
         outer->rhs.var() == x && outer->lhs.body() == inner->lhs && outer->rhs.body() == inner->rhs;
}

bool match_n_forall(const Formula& f, K quant) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->rhs, quant) || imp->rhs.body() != imp->lhs) return false;
  const std::string& x = imp->rhs.var();
  return quant == K::kForAllObj ? !occurs_free_obj(imp->lhs, x) : !occurs_free_pred(imp->lhs, x);
}

bool match_barcan_x(const Formula& f) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kForAllObj) || !is_kind(imp->lhs.body(), K::kKnows)) return false;
  const Formula& kphi = imp->lhs.body();
  const Formula& r = imp->rhs;
  return is_kind(r, K::kKnows) && r.agent() == kphi.agent() && is_kind(r.body(), K::kForAllObj) &&
         r.body().var() == imp->lhs.var() && r.body().body() == kphi.body();
}

// A_i(X(c)) for the given X; returns c.
std::optional<ObjTerm> aware_of_var(const Formula& f, int agent, const std::string& X) {
  if (!is_kind(f, K::kAware) || f.agent() != agent || !is_pred_var_atom(f.body(), X)) return std::nullopt;
  return f.body().arg();
}

bool match_barcan_X(const Formula& f) {
  // (A_i(forallp X. phi) & forallp X. (A_i X(c) -> K_i phi))
  //   -> K_i((forallp X. A_i X(c)) -> forallp X. phi)
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kAnd) || !is_kind(imp->rhs, K::kKnows)) return false;
  const Formula& a = imp->lhs.lhs();
  const Formula& b = imp->lhs.rhs();
  if (!is_kind(a, K::kAware) || !is_kind(a.body(), K::kForAllPred)) return false;
  const int i = a.agent();
  const std::string& X = a.body().var();
  const Formula& phi = a.body().body();
  if (!is_kind(b, K::kForAllPred) || b.var() != X) return false;
  auto bi = as_imp(b.body());
  if (!bi) return false;
  auto c = aware_of_var(bi->lhs, i, X);
  if (!c || !is_kind(bi->rhs, K::kKnows) || bi->rhs.agent() != i || bi->rhs.body() != phi) return false;
  const Formula& k = imp->rhs;
  if (k.agent() != i) return false;
  auto ki = as_imp(k.body());
  if (!ki || !is_kind(ki->lhs, K::kForAllPred) || ki->lhs.var() != X) return false;
  auto c2 = aware_of_var(ki->lhs.body(), i, X);
  return c2 && *c2 == *c && ki->rhs == a.body();
}

bool match_fa_X(const Formula& f) {
  auto imp = as_imp(f);
  if (!imp || !is_kind(imp->lhs, K::kForAllPred)) return false;
  const Formula& l = imp->lhs;
  if (!is_kind(l.body(), K::kNot)) return false;
  const Formula& aw = l.body().body();
  if (!is_kind(aw, K::kAware) || !aware_of_var(aw, aw.agent(), l.var())) return false;
  return is_kind(imp->rhs, K::kKnows) && imp->rhs.agent() == aw.agent() && imp->rhs.body() == l;
}

bool match_fin_x(const Formula& f, const ProofContext& ctx) {
  auto iff = as_iff(f);
  if (!iff || !is_kind(iff->lhs, K::kForAllObj) || ctx.sig.objects.empty()) return false;
  std::vector<Formula> parts;
  for (const auto& c : ctx.sig.objects) {
    parts.push_back(substitute_obj(iff->lhs.body(), iff->lhs.var(), ObjTerm::standard_name(c)));
  }
  return Formula::conjunction_of(parts) == iff->rhs;
}

void flatten_and(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == K::kAnd) {
    flatten_and(f.lhs(), out);
    flatten_and(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

bool match_agp(const Formula& f) {
  auto iff = as_iff(f);
  const Formula* aware = nullptr;
  if (iff) {
    aware = &iff->lhs;
  } else if (f.kind() == K::kAware) {
    // With no symbols the right-hand side is the empty conjunction.
    Symbols s = symbols_of(f.body());
    return s.predicates.empty() && s.concepts.empty();
  }
  if (!aware || aware->kind() != K::kAware) return false;
  const int i = aware->agent();
  Symbols s = symbols_of(aware->body());
  std::set<std::pair<HeadKind, std::string>> want;
  for (const auto& p : s.predicates) want.emplace(HeadKind::kPredicate, p);
  for (const auto& c : s.concepts) want.emplace(HeadKind::kConcept, c);
  if (want.empty()) return false;
  std::vector<Formula> conj;
  flatten_and(iff->rhs, conj);
  std::set<std::pair<HeadKind, std::string>> got;
  // One shared argument: the schema's variable, or a name once closed.
  std::optional<ObjTerm> arg;
  for (const auto& c : conj) {
    if (c.kind() != K::kAware || c.agent() != i || c.body().kind() != K::kAtom) return false;
    const Formula& a = c.body();
    if (a.head().kind != HeadKind::kPredicate && a.head().kind != HeadKind::kConcept) return false;
    if (arg && !(*arg == a.arg())) return false;
    arg = a.arg();
    got.emplace(a.head().kind, a.head().name);
  }
  return got == want && conj.size() == want.size();
}

// Letters for the propositional skeleton.
void skeleton_letters(const Formula& f, std::vector<Formula>& letters) {
  if (f.kind() == K::kNot) return skeleton_letters(f.body(), letters);
  if (f.kind() == K::kAnd) {
    skeleton_letters(f.lhs(), letters);
    skeleton_letters(f.rhs(), letters);
    return;
  }
  if (std::find(letters.begin(), letters.end(), f) == letters.end()) letters.push_back(f);
}

bool eval_skeleton(const Formula& f, const std::vector<Formula>& letters, std::uint32_t bits) {
  if (f.kind() == K::kNot) return !eval_skeleton(f.body(), letters, bits);
  if (f.kind() == K::kAnd) return eval_skeleton(f.lhs(), letters, bits) && eval_skeleton(f.rhs(), letters, bits);
  auto idx = static_cast<std::size_t>(std::find(letters.begin(), letters.end(), f) - letters.begin());
  return ((bits >> idx) & 1U) != 0;
}

}  // namespace

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {
      "Prop",      "AGP",       "KA",        "K",         "T",        "4",       "5",
      "A0",        "Con",       "1_forallx", "1_forallX", "K_forallx", "K_forallX",
      "N_forallx", "N_forallX", "Barcan_x",  "Barcan_X",  "FA_X",     "Fin_x"};
  return names;
}

bool is_prop_tautology_instance(const Formula& f) {
  std::vector<Formula> letters;
  skeleton_letters(f, letters);
  if (letters.size() > 20) throw Error("LetterCapExceeded", std::to_string(letters.size()) + " letters");
  const std::uint32_t rows = std::uint32_t{1} << letters.size();
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    if (!eval_skeleton(f, letters, bits)) return false;
  }
  return true;
}

bool is_forallX_instance_bc(const Formula& f) {
  Binding b = match_1_forallX(f);
  return b == Binding::kBc || b == Binding::kUnused;
}

bool is_forallX_instance_concept(const Formula& f) {
  Binding b = match_1_forallX(f);
  return b == Binding::kConcept || b == Binding::kUnused;
}

bool is_instance(const std::string& ax, const Formula& f, const ProofContext& ctx) {
  if (ax == "Prop") return is_prop_tautology_instance(f);
  if (ax == "AGP") return match_agp(f);
  if (ax == "KA") return match_ka(f);
  if (ax == "K") return match_k(f);
  if (ax == "T") return match_t(f);
  if (ax == "4") return match_4(f);
  if (ax == "5") return match_5(f);
  if (ax == "A0") return match_a0(f);
  if (ax == "Con") return match_con(f);
  if (ax == "1_forallx") return match_1_forallx(f, ctx);
  if (ax == "1_forallX") return match_1_forallX(f) != Binding::kNone;
  if (ax == "K_forallx") return match_k_forall(f, K::kForAllObj);
  if (ax == "K_forallX") return match_k_forall(f, K::kForAllPred);
  if (ax == "N_forallx") return match_n_forall(f, K::kForAllObj);
  if (ax == "N_forallX") return match_n_forall(f, K::kForAllPred);
  if (ax == "Barcan_x") return match_barcan_x(f);
  if (ax == "Barcan_X") return match_barcan_X(f);
  if (ax == "FA_X") return match_fa_X(f);
  if (ax == "Fin_x") return ctx.objects_finite && match_fin_x(f, ctx);
  throw Error("UnknownAxiom", ax);
}

std::set<std::string> recognize_axiom(const Formula& f, const ProofContext& ctx) {
  std::set<std::string> out;
  for (const auto& ax : axiom_names()) {
    try {
      if (is_instance(ax, f, ctx)) out.insert(ax);
    } catch (const Error&) {
      // Prop over the letter cap: not recognised.
    }
  }
  return out;
}

ProofCheck check_proof(const std::vector<ProofLine>& lines, const ProofContext& ctx) {
  auto fail = [](std::size_t line, std::string reason, std::string detail) {
    ProofCheck r;
    r.ok = false;
    r.line = line;
    r.reason = std::move(reason);
    r.detail = std::move(detail);
    return r;
  };
  const auto& names = axiom_names();
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t L = idx + 1;
    const ProofLine& pl = lines[idx];
    const Formula& cur = pl.formula;
    const bool is_axiom = std::find(names.begin(), names.end(), pl.by) != names.end();
    const bool is_rule =
        pl.by == "MP" || pl.by == "Gen_K" || pl.by == "Gen_forallx" || pl.by == "Gen_forallX";
    if (!is_axiom && !is_rule) return fail(L, "UnknownJustification", pl.by);

    std::size_t want_refs = pl.by == "MP" ? 2 : is_rule ? 1 : 0;
    if (pl.refs.size() != want_refs) {
      return fail(L, "BadReference", pl.by + " cites " + std::to_string(want_refs) + " line(s)");
    }
    for (std::size_t r : pl.refs) {
      if (r == 0) return fail(L, "BadReference", "line numbers start at 1");
      if (r >= L) return fail(L, "ForwardReference", "cites line " + std::to_string(r));
    }

    if (is_axiom) {
      if (pl.by == "Fin_x" && !ctx.objects_finite) {
        return fail(L, "FinRequiresFiniteObjects", "the object list is not declared complete");
      }
      bool ok = false;
      try {
        ok = is_instance(pl.by, cur, ctx);
      } catch (const Error& e) {
        return fail(L, "NotAnInstance", e.what());
      }
      if (!ok) return fail(L, "NotAnInstance", render_pretty(cur) + " is not an instance of " + pl.by);
      continue;
    }

    if (pl.by == "MP") {
      const Formula& a = lines[pl.refs[0] - 1].formula;
      const Formula& b = lines[pl.refs[1] - 1].formula;
      auto ib = as_imp(b);
      auto ia = as_imp(a);
      bool ok = (ib && ib->lhs == a && ib->rhs == cur) || (ia && ia->lhs == b && ia->rhs == cur);
      if (!ok) return fail(L, "RuleMismatch", "MP needs phi and phi -> current line");
      continue;
    }
    const Formula& prem = lines[pl.refs[0] - 1].formula;
    if (pl.by == "Gen_K") {
      bool ok = cur.kind() == K::kKnows && prem.kind() == K::kAnd && prem.lhs() == cur.body() &&
                prem.rhs().kind() == K::kAware && prem.rhs().agent() == cur.agent() &&
                prem.rhs().body() == cur.body();
      if (!ok) return fail(L, "RuleMismatch", "Gen_K needs phi & A_i phi and concludes K_i phi");
      continue;
    }
    if (pl.by == "Gen_forallx") {
      if (!pl.constant) return fail(L, "MissingArgument", "Gen_forallx needs \"const\"");
      if (!ctx.sig.is_object(*pl.constant)) return fail(L, "RuleMismatch", *pl.constant + " is not an object");
      if (cur.kind() != K::kForAllObj) return fail(L, "RuleMismatch", "conclusion must be forall x. ...");
      Abstraction ab = abstract_name(prem, *pl.constant, cur.var());
      if (!ab.result) return fail(L, "Capture", cur.var() + " would be captured");
      if (*ab.result != cur.body()) return fail(L, "RuleMismatch", "body is not the premise with " + *pl.constant + " abstracted");
      continue;
    }
    // Gen_forallX
    if (!pl.pred) return fail(L, "MissingArgument", "Gen_forallX needs \"pred\"");
    if (!ctx.sig.is_predicate(*pl.pred)) return fail(L, "RuleMismatch", *pl.pred + " is not a predicate");
    if (cur.kind() != K::kForAllPred) return fail(L, "RuleMismatch", "conclusion must be forallp X. ...");
    Abstraction ab = abstract_predicate(prem, *pl.pred, cur.var());
    if (!ab.result) return fail(L, "Capture", cur.var() + " would be captured");
    if (*ab.result != cur.body()) return fail(L, "RuleMismatch", "body is not the premise with " + *pl.pred + " abstracted");
  }
  return {};
}

ProofCheck check_proof_json(std::string_view text, const ProofContext& ctx) {
  using nlohmann::json;
  auto fail = [](std::size_t line, std::string reason, std::string detail) {
    ProofCheck r;
    r.ok = false;
    r.line = line;
    r.reason = std::move(reason);
    r.detail = std::move(detail);
    return r;
  };
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    return fail(0, "BadProofFile", e.what());
  }
  if (!j.is_array()) return fail(0, "BadProofFile", "a proof is a JSON array of lines");
  std::vector<ProofLine> lines;
  for (std::size_t idx = 0; idx < j.size(); ++idx) {
    const json& e = j[idx];
    const std::size_t L = idx + 1;
    if (!e.is_object() || !e.contains("formula") || !e["formula"].is_string() || !e.contains("by") ||
        !e["by"].is_string()) {
      return fail(L, "BadProofFile", "each line needs string fields formula and by");
    }
    for (const auto& [k, v] : e.items()) {
      if (k != "formula" && k != "by" && k != "refs" && k != "const" && k != "pred") {
        return fail(L, "BadProofFile", "unknown key " + k);
      }
    }
    std::optional<Formula> f;
    try {
      f = parse(e["formula"].get<std::string>(), ctx.sig);
    } catch (const Error& err) {
      return fail(L, "ParseError", err.what());
    }
    ProofLine pl{*f, e["by"].get<std::string>(), {}, std::nullopt, std::nullopt};
    if (e.contains("refs")) {
      if (!e["refs"].is_array()) return fail(L, "BadProofFile", "refs must be an array");
      for (const auto& r : e["refs"]) {
        if (!r.is_number_integer() || r.get<long long>() < 0) return fail(L, "BadReference", "refs must be positive integers");
        pl.refs.push_back(r.get<std::size_t>());
      }
    }
    if (e.contains("const")) {
      if (!e["const"].is_string()) return fail(L, "BadProofFile", "const must be a string");
      pl.constant = e["const"].get<std::string>();
    }
    if (e.contains("pred")) {
      if (!e["pred"].is_string()) return fail(L, "BadProofFile", "pred must be a string");
      pl.pred = e["pred"].get<std::string>();
    }
    lines.push_back(std::move(pl));
  }
  return check_proof(lines, ctx);
}

ProofContext proof_context_from_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("BadSignatureFile", e.what());
  }
  if (!j.is_object()) throw Error("BadSignatureFile", "expected an object");
  ProofContext ctx;
  auto list = [&](const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    for (const auto& v : j[key]) {
      if (!v.is_string()) throw Error("BadSignatureFile", std::string(key) + " must hold strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  for (const auto& [k, v] : j.items()) {
    if (k != "objects" && k != "predicates" && k != "concepts" && k != "agents" && k != "objects_finite") {
      throw Error("BadSignatureFile", "unknown key " + k);
    }
  }
  ctx.sig.objects = list("objects");
  ctx.sig.predicates = list("predicates");
  ctx.sig.concepts = list("concepts");
  if (j.contains("agents")) ctx.sig.agents = j["agents"].get<int>();
  if (j.contains("objects_finite")) ctx.objects_finite = j["objects_finite"].get<bool>();
  ctx.sig.validate();
  return ctx;
}

}  // namespace awarekit
