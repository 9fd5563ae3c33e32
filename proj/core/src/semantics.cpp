#include "awarekit/semantics.hpp"

#include <algorithm>

#include "awarekit/error.hpp"

namespace awarekit {

bool in_language(const Formula& f, const LanguageSlice& slice) {
  return slice.contains(symbols_of(f));
}

Evaluator::Evaluator(const Model& m, EvalOptions options)
    : m_(m), options_(options), reps_(m.num_states()) {}

namespace {

int max_agent(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return 0;
    case Formula::Kind::kAnd:
      return std::max(max_agent(f.lhs()), max_agent(f.rhs()));
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows:
      return std::max(f.agent(), max_agent(f.body()));
    default:
      return max_agent(f.body());
  }
}

}  // namespace

void Evaluator::check_budget(const Formula& f) const {
  if (max_agent(f) > m_.sig.agents) throw Error("BadAgent", "formula mentions an unknown agent");
  Symbols s = symbols_of(f);
  if (!s.is_sentence()) throw Error("NotASentence", render_pretty(f) + " has free variables");
  int depth = pred_quantifier_depth(f);
  if (depth > options_.max_pred_nesting) {
    throw Error("BudgetExceeded", "predicate-quantifier nesting " + std::to_string(depth) +
                                      " exceeds " + std::to_string(options_.max_pred_nesting));
  }
}

bool Evaluator::sat(StateId w, const Formula& f) {
  if (w >= m_.num_states()) throw Error("UnknownState", std::to_string(w));
  check_budget(f);
  return eval(w, f);
}

Validity Evaluator::valid_in_model(const Formula& f) {
  check_budget(f);
  Validity v;
  for (StateId w = 0; w < m_.num_states(); ++w) {
    if (!in_language(f, m_.language[w])) continue;
    v.vacuous = false;
    ++v.states_checked;
    if (!eval(w, f)) {
      v.valid = false;
      v.counter_state = w;
      return v;
    }
  }
  return v;
}

const std::vector<std::shared_ptr<const BooleanConcept>>& Evaluator::representatives(StateId w) {
  if (!reps_[w]) {
    BcOptions bo;
    bo.cap = options_.max_preds;
    bo.allow_trivial = options_.allow_trivial;
    std::vector<std::string> preds = m_.predicates_at(w);
    std::vector<std::shared_ptr<const BooleanConcept>> out;
    for (auto& bc : enumerate_bc(preds, bo)) {
      out.push_back(std::make_shared<const BooleanConcept>(std::move(bc)));
    }
    reps_[w] = std::move(out);
  }
  return *reps_[w];
}

bool Evaluator::eval(StateId w, const Formula& f) {
  const auto k = f.kind();
  const bool cacheable = options_.memoize && (k == Formula::Kind::kForAllObj ||
                                              k == Formula::Kind::kForAllPred ||
                                              k == Formula::Kind::kKnows);
  if (!cacheable) return eval_uncached(w, f);
  Key key{w, f};
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  bool r = eval_uncached(w, f);
  cache_.emplace(std::move(key), r);
  return r;
}

bool Evaluator::eval_uncached(StateId w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      const PredHead& h = f.head();
      const ObjTerm& a = f.arg();
      if (a.is_variable()) throw Error("NotASentence", "free variable " + a.name);
      switch (h.kind) {
        case HeadKind::kPredicate:
          return m_.language[w].predicates.contains(h.name) && m_.holds(w, h.name, a.name);
        case HeadKind::kConcept: {
          if (!m_.language[w].concepts.contains(h.name)) return false;
          const BooleanConcept& def = m_.concept_defs[w].at(h.name);
          return def.evaluate([&](const std::string& p) { return m_.holds(w, p, a.name); });
        }
        case HeadKind::kCombination: {
          // Equals the value of the expanded Boolean combination: false as soon
          // as one support predicate is out of language, classical otherwise.
          const BooleanConcept& bc = *h.combination;
          for (const auto& p : bc.support()) {
            if (!m_.language[w].predicates.contains(p)) return false;
          }
          return bc.evaluate([&](const std::string& p) { return m_.holds(w, p, a.name); });
        }
        case HeadKind::kVariable:
          throw Error("NotASentence", "free predicate variable " + h.name);
      }
      return false;
    }
    case Formula::Kind::kNot:
      return in_language(f.body(), m_.language[w]) && !eval(w, f.body());
    case Formula::Kind::kAnd:
      return eval(w, f.lhs()) && eval(w, f.rhs());
    case Formula::Kind::kForAllObj:
      for (const auto& d : m_.sig.objects) {
        if (!eval(w, substitute_obj(f.body(), f.var(), ObjTerm::standard_name(d)))) return false;
      }
      return true;
    case Formula::Kind::kForAllPred: {
      const auto& reps = representatives(w);
      for (const auto& psi : reps) {
        Formula inst = options_.expand_substitution ? substitute_pred(f.body(), f.var(), *psi)
                                                    : substitute_pred_inline(f.body(), f.var(), psi);
        if (!eval(w, inst)) return false;
      }
      return true;
    }
    case Formula::Kind::kAware:
      return in_language(f.body(), m_.aware(f.agent(), w));
    case Formula::Kind::kKnows: {
      if (!in_language(f.body(), m_.aware(f.agent(), w))) return false;
      for (StateId v : m_.cell(f.agent(), w)) {
        if (!eval(v, f.body())) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace awarekit
