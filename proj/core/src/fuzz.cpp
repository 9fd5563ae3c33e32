#include <algorithm>

#include "awarekit/axiomatics.hpp"
#include "awarekit/bool_concept.hpp"
#include "awarekit/error.hpp"
#include "awarekit/model_io.hpp"
#include "awarekit/semantics.hpp"

namespace awarekit {

namespace {

using F = Formula;

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Random formula whose free variables are among the given ones. Inner binders
// use v<n> / Z<n>, which never clash with the schema variables x / X.
class Gen {
 public:
  Gen(std::mt19937_64& rng, const Signature& sig) : rng_(rng), sig_(sig) {}

  F formula(int depth, std::vector<std::string> objs, std::vector<std::string> preds, int pred_nest) {
    if (depth <= 0 || coin(rng_, 0.25)) return atom(objs, preds);
    switch (pick(rng_, 7)) {
      case 0:
        return F::negation(formula(depth - 1, objs, preds, pred_nest));
      case 1:
        return F::conjunction(formula(depth - 1, objs, preds, pred_nest),
                              formula(depth - 1, objs, preds, pred_nest));
      case 2: {
        std::string v = "v" + std::to_string(counter_++);
        objs.push_back(v);
        return F::forall_obj(v, formula(depth - 1, objs, preds, pred_nest));
      }
      case 3: {
        if (pred_nest <= 0) return F::negation(formula(depth - 1, objs, preds, pred_nest));
        std::string v = "Z" + std::to_string(counter_++);
        preds.push_back(v);
        return F::forall_pred(v, formula(depth - 1, objs, preds, pred_nest - 1));
      }
      case 4:
        return F::aware(agent(), formula(depth - 1, objs, preds, pred_nest));
      default:
        return F::knows(agent(), formula(depth - 1, objs, preds, pred_nest));
    }
  }

  int agent() { return static_cast<int>(pick(rng_, static_cast<std::size_t>(sig_.agents))) + 1; }

  ObjTerm object() { return ObjTerm::standard_name(sig_.objects[pick(rng_, sig_.objects.size())]); }

  BooleanConcept concept_bc() {
    std::vector<std::string> support;
    for (const auto& p : sig_.predicates) {
      if (coin(rng_, 0.5)) support.push_back(p);
    }
    if (support.empty()) support.push_back(sig_.predicates[pick(rng_, sig_.predicates.size())]);
    if (support.size() > 2) support.resize(2);
    std::vector<bool> table(std::size_t{1} << support.size());
    for (std::size_t r = 0; r < table.size(); ++r) table[r] = coin(rng_, 0.5);
    return BooleanConcept::from_table(support, table);
  }

 private:
  F atom(const std::vector<std::string>& objs, const std::vector<std::string>& preds) {
    ObjTerm arg = !objs.empty() && coin(rng_, 0.6) ? ObjTerm::variable(objs[pick(rng_, objs.size())]) : object();
    const std::size_t np = sig_.predicates.size();
    const std::size_t nc = sig_.concepts.size();
    const std::size_t nv = preds.size();
    // Favour bound predicate variables so the quantifier is not vacuous.
    if (nv > 0 && coin(rng_, 0.5)) return F::atom(PredHead::variable(preds[pick(rng_, nv)]), arg);
    std::size_t k = pick(rng_, np + nc);
    if (k < np) return F::atom(PredHead::predicate(sig_.predicates[k]), arg);
    return F::atom(PredHead::concept_symbol(sig_.concepts[k - np]), arg);
  }

  std::mt19937_64& rng_;
  const Signature& sig_;
  int counter_ = 0;
};

F imp(F a, F b) { return F::implication(std::move(a), std::move(b)); }
F var_atom(const std::string& X, const ObjTerm& t) { return F::atom(PredHead::variable(X), t); }

F prop_instance(std::mt19937_64& rng, Gen& g, int depth) {
  F p = g.formula(depth, {}, {}, 1);
  F q = g.formula(depth, {}, {}, 1);
  F r = g.formula(depth, {}, {}, 1);
  switch (pick(rng, 7)) {
    case 0:
      return imp(p, p);
    case 1:
      return F::disjunction(p, F::negation(p));
    case 2:
      return F::negation(F::conjunction(p, F::negation(p)));
    case 3:
      return imp(F::conjunction(p, q), p);
    case 4:
      return imp(p, imp(q, p));
    case 5:
      return imp(imp(p, q), imp(F::conjunction(p, p), q));
    default:
      return imp(F::conjunction(imp(p, q), imp(q, r)), imp(p, r));
  }
}

}  // namespace

Formula random_sentence(std::mt19937_64& rng, const Model& m, int depth) {
  Gen g(rng, m.sig);
  return g.formula(depth, {}, {}, 1);
}

Formula random_instance(const std::string& ax, std::mt19937_64& rng, const Model& m, int depth) {
  Gen g(rng, m.sig);
  const int i = g.agent();
  const std::string x = "x";
  const std::string X = "X";
  auto sentence = [&] { return g.formula(depth, {}, {}, 1); };
  auto open_x = [&] { return g.formula(depth, {x}, {}, 1); };
  auto open_X = [&] { return g.formula(depth, {}, {X}, 0); };

  if (ax == "Prop") return prop_instance(rng, g, depth);
  if (ax == "AGP") {
    F phi = sentence();
    Symbols s = symbols_of(phi);
    if (s.predicates.empty() && s.concepts.empty()) return F::aware(i, phi);
    // Closed with the least standard name.
    ObjTerm d = ObjTerm::standard_name(m.sig.objects.front());
    std::vector<F> parts;
    for (const auto& p : m.sig.predicates) {
      if (s.predicates.count(p)) parts.push_back(F::aware(i, F::atom(PredHead::predicate(p), d)));
    }
    for (const auto& c : m.sig.concepts) {
      if (s.concepts.count(c)) parts.push_back(F::aware(i, F::atom(PredHead::concept_symbol(c), d)));
    }
    return F::equivalence(F::aware(i, phi), F::conjunction_of(parts));
  }
  if (ax == "KA") {
    F a = F::aware(i, sentence());
    return imp(a, F::knows(i, a));
  }
  if (ax == "K") {
    F phi = sentence();
    F psi = sentence();
    return imp(F::conjunction(F::knows(i, phi), F::knows(i, imp(phi, psi))), F::knows(i, psi));
  }
  if (ax == "T") {
    F phi = sentence();
    return imp(F::knows(i, phi), phi);
  }
  if (ax == "4") {
    F k = F::knows(i, sentence());
    return imp(k, F::knows(i, k));
  }
  if (ax == "5") {
    F phi = sentence();
    F nk = F::negation(F::knows(i, phi));
    return imp(F::conjunction(nk, F::aware(i, phi)), F::knows(i, nk));
  }
  if (ax == "A0") {
    F phi = sentence();
    return imp(F::knows(i, phi), F::aware(i, phi));
  }
  if (ax == "Con") {
    if (m.sig.concepts.empty()) throw Error("BadSignature", "Con needs a concept symbol");
    const std::string& c = m.sig.concepts[pick(rng, m.sig.concepts.size())];
    ObjTerm xv = ObjTerm::variable(x);
    return F::exists_pred(
        X, F::forall_obj(x, F::equivalence(F::atom(PredHead::concept_symbol(c), xv), var_atom(X, xv))));
  }
  if (ax == "1_forallx") {
    F psi = open_x();
    return imp(F::forall_obj(x, psi), substitute_obj(psi, x, g.object()));
  }
  if (ax == "1_forallX") {
    F phi = open_X();
    return imp(F::forall_pred(X, phi), substitute_pred(phi, X, g.concept_bc()));
  }
  if (ax == "K_forallx") {
    F phi = open_x();
    F psi = open_x();
    return imp(F::forall_obj(x, imp(phi, psi)), imp(F::forall_obj(x, phi), F::forall_obj(x, psi)));
  }
  if (ax == "K_forallX") {
    F phi = open_X();
    F psi = open_X();
    return imp(F::forall_pred(X, imp(phi, psi)), imp(F::forall_pred(X, phi), F::forall_pred(X, psi)));
  }
  if (ax == "N_forallx") {
    F phi = sentence();
    return imp(phi, F::forall_obj(x, phi));
  }
  if (ax == "N_forallX") {
    F phi = g.formula(depth, {}, {}, 0);
    return imp(phi, F::forall_pred(X, phi));
  }
  if (ax == "Barcan_x") {
    F phi = open_x();
    return imp(F::forall_obj(x, F::knows(i, phi)), F::knows(i, F::forall_obj(x, phi)));
  }
  if (ax == "Barcan_X") {
    F phi = open_X();
    ObjTerm c = g.object();
    F ax_c = F::aware(i, var_atom(X, c));
    F lhs = F::conjunction(F::aware(i, F::forall_pred(X, phi)), F::forall_pred(X, imp(ax_c, F::knows(i, phi))));
    return imp(lhs, F::knows(i, imp(F::forall_pred(X, ax_c), F::forall_pred(X, phi))));
  }
  if (ax == "FA_X") {
    F l = F::forall_pred(X, F::negation(F::aware(i, var_atom(X, g.object()))));
    return imp(l, F::knows(i, l));
  }
  if (ax == "Fin_x") {
    F psi = open_x();
    std::vector<F> parts;
    for (const auto& c : m.sig.objects) parts.push_back(substitute_obj(psi, x, ObjTerm::standard_name(c)));
    return F::equivalence(F::forall_obj(x, psi), F::conjunction_of(parts));
  }
  throw Error("UnknownAxiom", ax);
}

FuzzReport fuzz_schema(const std::string& label, const InstanceGenerator& gen, std::size_t trials,
                       std::uint64_t seed, const FuzzOptions& options) {
  FuzzReport rep;
  rep.axiom = label;
  rep.trials = trials;
  ModelDims dims = options.dims;
  dims.with_economy = false;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = seed * 1000003ULL + t;
    Model m = random_model(s, dims);
    std::mt19937_64 rng(s ^ 0x9e3779b97f4a7c15ULL);
    Formula f = gen(rng, m);
    Evaluator ev(m);
    Validity v;
    try {
      v = ev.valid_in_model(f);
    } catch (const Error&) {
      ++rep.skipped;
      continue;
    }
    if (v.vacuous) continue;
    ++rep.checked;
    if (!v.valid && rep.countermodels.size() < options.max_countermodels) {
      rep.countermodels.push_back({t, render_pretty(f), m.states[*v.counter_state], model_to_json(m)});
    }
  }
  return rep;
}

FuzzReport fuzz_axiom_soundness(const std::string& axiom, std::size_t trials, std::uint64_t seed,
                                const FuzzOptions& options) {
  const int depth = options.formula_depth;
  return fuzz_schema(
      axiom, [&](std::mt19937_64& rng, const Model& m) { return random_instance(axiom, rng, m, depth); },
      trials, seed, options);
}

}  // namespace awarekit
