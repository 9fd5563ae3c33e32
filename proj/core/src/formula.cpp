#include "awarekit/formula.hpp"

#include <functional>
#include <map>
#include <utility>

#include "awarekit/bool_concept.hpp"
#include "awarekit/error.hpp"

namespace awarekit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

PredHead PredHead::combination_of(std::shared_ptr<const BooleanConcept> bc) {
  PredHead h;
  h.kind = HeadKind::kCombination;
  h.name = bc->key();
  h.combination = std::move(bc);
  return h;
}

bool PredHead::operator==(const PredHead& other) const {
  if (kind != other.kind) return false;
  if (kind == HeadKind::kCombination) return *combination == *other.combination;
  return name == other.name;
}

struct Formula::Node {
  Kind kind;
  PredHead head;
  ObjTerm arg;
  std::string var;
  int agent = 0;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t head_hash(const PredHead& h) {
  return mix(static_cast<std::size_t>(h.kind), std::hash<std::string>{}(h.name));
}

}  // namespace

Formula Formula::atom(PredHead head, ObjTerm arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAtom;
  n->hash = mix(mix(1, head_hash(head)),
                mix(static_cast<std::size_t>(arg.kind), std::hash<std::string>{}(arg.name)));
  n->head = std::move(head);
  n->arg = std::move(arg);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kNot;
  n->size = f.size() + 1;
  n->hash = mix(2, f.hash());
  n->a = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAnd;
  n->size = lhs.size() + rhs.size() + 1;
  n->hash = mix(mix(3, lhs.hash()), rhs.hash());
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::forall_obj(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kForAllObj;
  n->size = body.size() + 1;
  n->hash = mix(mix(4, std::hash<std::string>{}(var)), body.hash());
  n->var = std::move(var);
  n->a = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::forall_pred(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kForAllPred;
  n->size = body.size() + 1;
  n->hash = mix(mix(5, std::hash<std::string>{}(var)), body.hash());
  n->var = std::move(var);
  n->a = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::aware(int agent, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAware;
  n->size = body.size() + 1;
  n->hash = mix(mix(6, static_cast<std::size_t>(agent)), body.hash());
  n->agent = agent;
  n->a = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::knows(int agent, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kKnows;
  n->size = body.size() + 1;
  n->hash = mix(mix(7, static_cast<std::size_t>(agent)), body.hash());
  n->agent = agent;
  n->a = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

Formula Formula::exists_obj(std::string var, Formula body) {
  return negation(forall_obj(std::move(var), negation(std::move(body))));
}

Formula Formula::exists_pred(std::string var, Formula body) {
  return negation(forall_pred(std::move(var), negation(std::move(body))));
}

Formula Formula::conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error("EmptyConjunction", "conjunction_of needs at least one part");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction(acc, parts[i]);
  return acc;
}

Formula Formula::disjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error("EmptyDisjunction", "disjunction_of needs at least one part");
  if (parts.size() == 1) return parts.front();
  std::vector<Formula> negated;
  negated.reserve(parts.size());
  for (const auto& p : parts) negated.push_back(negation(p));
  return negation(conjunction_of(negated));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const PredHead& Formula::head() const { return node_->head; }
const ObjTerm& Formula::arg() const { return node_->arg; }
const Formula& Formula::body() const { return *node_->a; }
const Formula& Formula::lhs() const { return *node_->a; }
const Formula& Formula::rhs() const { return *node_->b; }
const std::string& Formula::var() const { return node_->var; }
int Formula::agent() const { return node_->agent; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.kind != y.kind || x.hash != y.hash || x.size != y.size) return false;
  switch (x.kind) {
    case Kind::kAtom:
      return x.head == y.head && x.arg == y.arg;
    case Kind::kNot:
      return *x.a == *y.a;
    case Kind::kAnd:
      return *x.a == *y.a && *x.b == *y.b;
    case Kind::kForAllObj:
    case Kind::kForAllPred:
      return x.var == y.var && *x.a == *y.a;
    case Kind::kAware:
    case Kind::kKnows:
      return x.agent == y.agent && *x.a == *y.a;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Symbols and free variables

namespace {

void collect(const Formula& f, Symbols& out, std::vector<std::string>& bound_obj,
             std::vector<std::string>& bound_pred) {
  auto bound = [](const std::vector<std::string>& v, const std::string& s) {
    for (const auto& b : v) if (b == s) return true;
    return false;
  };
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      const PredHead& h = f.head();
      switch (h.kind) {
        case HeadKind::kPredicate: out.predicates.insert(h.name); break;
        case HeadKind::kConcept: out.concepts.insert(h.name); break;
        case HeadKind::kVariable:
          if (!bound(bound_pred, h.name)) out.free_pred_vars.insert(h.name);
          break;
        case HeadKind::kCombination:
          for (const auto& p : h.combination->support()) out.predicates.insert(p);
          break;
      }
      if (f.arg().is_variable()) {
        if (!bound(bound_obj, f.arg().name)) out.free_obj_vars.insert(f.arg().name);
      } else {
        out.objects.insert(f.arg().name);
      }
      return;
    }
    case Formula::Kind::kNot:
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows:
      collect(f.body(), out, bound_obj, bound_pred);
      return;
    case Formula::Kind::kAnd:
      collect(f.lhs(), out, bound_obj, bound_pred);
      collect(f.rhs(), out, bound_obj, bound_pred);
      return;
    case Formula::Kind::kForAllObj:
      bound_obj.push_back(f.var());
      collect(f.body(), out, bound_obj, bound_pred);
      bound_obj.pop_back();
      return;
    case Formula::Kind::kForAllPred:
      bound_pred.push_back(f.var());
      collect(f.body(), out, bound_obj, bound_pred);
      bound_pred.pop_back();
      return;
  }
}

}  // namespace

Symbols symbols_of(const Formula& f) {
  Symbols out;
  std::vector<std::string> bo;
  std::vector<std::string> bp;
  collect(f, out, bo, bp);
  return out;
}

bool is_sentence(const Formula& f) { return symbols_of(f).is_sentence(); }

bool occurs_free_obj(const Formula& f, const std::string& var) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f.arg().is_variable() && f.arg().name == var;
    case Formula::Kind::kNot:
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows:
    case Formula::Kind::kForAllPred:
      return occurs_free_obj(f.body(), var);
    case Formula::Kind::kAnd:
      return occurs_free_obj(f.lhs(), var) || occurs_free_obj(f.rhs(), var);
    case Formula::Kind::kForAllObj:
      return f.var() != var && occurs_free_obj(f.body(), var);
  }
  return false;
}

bool occurs_free_pred(const Formula& f, const std::string& var) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f.head().kind == HeadKind::kVariable && f.head().name == var;
    case Formula::Kind::kNot:
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows:
    case Formula::Kind::kForAllObj:
      return occurs_free_pred(f.body(), var);
    case Formula::Kind::kAnd:
      return occurs_free_pred(f.lhs(), var) || occurs_free_pred(f.rhs(), var);
    case Formula::Kind::kForAllPred:
      return f.var() != var && occurs_free_pred(f.body(), var);
  }
  return false;
}

int pred_quantifier_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return 0;
    case Formula::Kind::kAnd:
      return std::max(pred_quantifier_depth(f.lhs()), pred_quantifier_depth(f.rhs()));
    case Formula::Kind::kForAllPred:
      return 1 + pred_quantifier_depth(f.body());
    default:
      return pred_quantifier_depth(f.body());
  }
}

int modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return 0;
    case Formula::Kind::kAnd:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows:
      return 1 + modal_depth(f.body());
    default:
      return modal_depth(f.body());
  }
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Rebuilds f bottom-up with an atom rewriter; binders of `var` with the given
// kind stop the descent. Returns f itself when nothing changed.
Formula rewrite_atoms(const Formula& f, Formula::Kind stop_kind, const std::string& var,
                      const std::function<std::optional<Formula>(const Formula&)>& on_atom) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto r = on_atom(f);
      return r ? *r : f;
    }
    case Formula::Kind::kNot: {
      Formula c = rewrite_atoms(f.body(), stop_kind, var, on_atom);
      return c == f.body() ? f : Formula::negation(std::move(c));
    }
    case Formula::Kind::kAnd: {
      Formula l = rewrite_atoms(f.lhs(), stop_kind, var, on_atom);
      Formula r = rewrite_atoms(f.rhs(), stop_kind, var, on_atom);
      if (l == f.lhs() && r == f.rhs()) return f;
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case Formula::Kind::kForAllObj:
    case Formula::Kind::kForAllPred: {
      if (f.kind() == stop_kind && f.var() == var) return f;
      Formula c = rewrite_atoms(f.body(), stop_kind, var, on_atom);
      if (c == f.body()) return f;
      return f.kind() == Formula::Kind::kForAllObj ? Formula::forall_obj(f.var(), std::move(c))
                                                   : Formula::forall_pred(f.var(), std::move(c));
    }
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows: {
      Formula c = rewrite_atoms(f.body(), stop_kind, var, on_atom);
      if (c == f.body()) return f;
      return f.kind() == Formula::Kind::kAware ? Formula::aware(f.agent(), std::move(c))
                                               : Formula::knows(f.agent(), std::move(c));
    }
  }
  return f;
}

std::string fresh_name(const std::string& base, const Formula& f, const std::string& avoid) {
  Symbols s = symbols_of(f);
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (candidate != avoid && !s.free_obj_vars.contains(candidate) &&
        !s.free_pred_vars.contains(candidate) && !occurs_free_obj(f, candidate)) {
      // Bound occurrences of candidate inside f are harmless: they shadow.
      return candidate;
    }
  }
}

}  // namespace

Formula substitute_obj(const Formula& f, const std::string& var, const ObjTerm& term) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      if (f.arg().is_variable() && f.arg().name == var) return Formula::atom(f.head(), term);
      return f;
    case Formula::Kind::kNot: {
      Formula c = substitute_obj(f.body(), var, term);
      return c == f.body() ? f : Formula::negation(std::move(c));
    }
    case Formula::Kind::kAnd: {
      Formula l = substitute_obj(f.lhs(), var, term);
      Formula r = substitute_obj(f.rhs(), var, term);
      if (l == f.lhs() && r == f.rhs()) return f;
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case Formula::Kind::kForAllObj: {
      if (f.var() == var) return f;
      if (!occurs_free_obj(f.body(), var)) return f;
      if (term.is_variable() && term.name == f.var()) {
        // Rename the binder so the incoming variable is not captured.
        std::string fresh = fresh_name(f.var(), f.body(), term.name);
        Formula renamed = substitute_obj(f.body(), f.var(), ObjTerm::variable(fresh));
        return Formula::forall_obj(fresh, substitute_obj(renamed, var, term));
      }
      return Formula::forall_obj(f.var(), substitute_obj(f.body(), var, term));
    }
    case Formula::Kind::kForAllPred: {
      Formula c = substitute_obj(f.body(), var, term);
      return c == f.body() ? f : Formula::forall_pred(f.var(), std::move(c));
    }
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows: {
      Formula c = substitute_obj(f.body(), var, term);
      if (c == f.body()) return f;
      return f.kind() == Formula::Kind::kAware ? Formula::aware(f.agent(), std::move(c))
                                               : Formula::knows(f.agent(), std::move(c));
    }
  }
  return f;
}

Formula substitute_pred(const Formula& f, const std::string& var, const BooleanConcept& psi) {
  return rewrite_atoms(f, Formula::Kind::kForAllPred, var,
                       [&](const Formula& a) -> std::optional<Formula> {
                         if (a.head().kind == HeadKind::kVariable && a.head().name == var) {
                           return psi.instantiate(a.arg());
                         }
                         return std::nullopt;
                       });
}

Formula substitute_pred_inline(const Formula& f, const std::string& var,
                               std::shared_ptr<const BooleanConcept> psi) {
  PredHead head = PredHead::combination_of(std::move(psi));
  return rewrite_atoms(f, Formula::Kind::kForAllPred, var,
                       [&](const Formula& a) -> std::optional<Formula> {
                         if (a.head().kind == HeadKind::kVariable && a.head().name == var) {
                           return Formula::atom(head, a.arg());
                         }
                         return std::nullopt;
                       });
}

namespace {

bool mentions_name(const Formula& f, const std::string& name) {
  return symbols_of(f).objects.contains(name);
}

bool mentions_predicate(const Formula& f, const std::string& pred) {
  return symbols_of(f).predicates.contains(pred);
}

std::optional<Formula> abstract_name_rec(const Formula& f, const std::string& name,
                                         const std::string& var) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      if (!f.arg().is_variable() && f.arg().name == name) {
        return Formula::atom(f.head(), ObjTerm::variable(var));
      }
      return f;
    case Formula::Kind::kNot:
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows:
    case Formula::Kind::kForAllPred:
    case Formula::Kind::kForAllObj: {
      if (f.kind() == Formula::Kind::kForAllObj && f.var() == var &&
          mentions_name(f.body(), name)) {
        return std::nullopt;
      }
      auto c = abstract_name_rec(f.body(), name, var);
      if (!c) return std::nullopt;
      switch (f.kind()) {
        case Formula::Kind::kNot: return Formula::negation(*c);
        case Formula::Kind::kAware: return Formula::aware(f.agent(), *c);
        case Formula::Kind::kKnows: return Formula::knows(f.agent(), *c);
        case Formula::Kind::kForAllPred: return Formula::forall_pred(f.var(), *c);
        default: return Formula::forall_obj(f.var(), *c);
      }
    }
    case Formula::Kind::kAnd: {
      auto l = abstract_name_rec(f.lhs(), name, var);
      auto r = abstract_name_rec(f.rhs(), name, var);
      if (!l || !r) return std::nullopt;
      return Formula::conjunction(*l, *r);
    }
  }
  return f;
}

std::optional<Formula> abstract_pred_rec(const Formula& f, const std::string& pred,
                                         const std::string& var) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      if (f.head().kind == HeadKind::kPredicate && f.head().name == pred) {
        return Formula::atom(PredHead::variable(var), f.arg());
      }
      return f;
    case Formula::Kind::kNot:
    case Formula::Kind::kAware:
    case Formula::Kind::kKnows:
    case Formula::Kind::kForAllPred:
    case Formula::Kind::kForAllObj: {
      if (f.kind() == Formula::Kind::kForAllPred && f.var() == var &&
          mentions_predicate(f.body(), pred)) {
        return std::nullopt;
      }
      auto c = abstract_pred_rec(f.body(), pred, var);
      if (!c) return std::nullopt;
      switch (f.kind()) {
        case Formula::Kind::kNot: return Formula::negation(*c);
        case Formula::Kind::kAware: return Formula::aware(f.agent(), *c);
        case Formula::Kind::kKnows: return Formula::knows(f.agent(), *c);
        case Formula::Kind::kForAllObj: return Formula::forall_obj(f.var(), *c);
        default: return Formula::forall_pred(f.var(), *c);
      }
    }
    case Formula::Kind::kAnd: {
      auto l = abstract_pred_rec(f.lhs(), pred, var);
      auto r = abstract_pred_rec(f.rhs(), pred, var);
      if (!l || !r) return std::nullopt;
      return Formula::conjunction(*l, *r);
    }
  }
  return f;
}

}  // namespace

Abstraction abstract_name(const Formula& f, const std::string& name, const std::string& var) {
  auto r = abstract_name_rec(f, name, var);
  if (!r) return {std::nullopt, "Capture"};
  return {r, ""};
}

Abstraction abstract_predicate(const Formula& f, const std::string& pred, const std::string& var) {
  auto r = abstract_pred_rec(f, pred, var);
  if (!r) return {std::nullopt, "Capture"};
  return {r, ""};
}

// ---------------------------------------------------------------------------
// Bound-variable canonicalisation

namespace {

Formula canonicalize_rec(const Formula& f, std::map<std::string, std::string>& obj_map,
                         std::map<std::string, std::string>& pred_map, int obj_depth,
                         int pred_depth, const std::string& obj_prefix,
                         const std::string& pred_prefix) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      PredHead h = f.head();
      ObjTerm a = f.arg();
      if (h.kind == HeadKind::kVariable) {
        auto it = pred_map.find(h.name);
        if (it != pred_map.end()) h.name = it->second;
      }
      if (a.is_variable()) {
        auto it = obj_map.find(a.name);
        if (it != obj_map.end()) a.name = it->second;
      }
      return Formula::atom(std::move(h), std::move(a));
    }
    case Formula::Kind::kNot:
      return Formula::negation(canonicalize_rec(f.body(), obj_map, pred_map, obj_depth,
                                                pred_depth, obj_prefix, pred_prefix));
    case Formula::Kind::kAware:
      return Formula::aware(f.agent(), canonicalize_rec(f.body(), obj_map, pred_map, obj_depth,
                                                        pred_depth, obj_prefix, pred_prefix));
    case Formula::Kind::kKnows:
      return Formula::knows(f.agent(), canonicalize_rec(f.body(), obj_map, pred_map, obj_depth,
                                                        pred_depth, obj_prefix, pred_prefix));
    case Formula::Kind::kAnd:
      return Formula::conjunction(
          canonicalize_rec(f.lhs(), obj_map, pred_map, obj_depth, pred_depth, obj_prefix,
                           pred_prefix),
          canonicalize_rec(f.rhs(), obj_map, pred_map, obj_depth, pred_depth, obj_prefix,
                           pred_prefix));
    case Formula::Kind::kForAllObj: {
      std::string name = obj_prefix + std::to_string(obj_depth + 1);
      auto saved = obj_map.find(f.var()) != obj_map.end()
                       ? std::optional<std::string>(obj_map[f.var()])
                       : std::nullopt;
      obj_map[f.var()] = name;
      Formula body = canonicalize_rec(f.body(), obj_map, pred_map, obj_depth + 1, pred_depth,
                                      obj_prefix, pred_prefix);
      if (saved) obj_map[f.var()] = *saved; else obj_map.erase(f.var());
      return Formula::forall_obj(name, std::move(body));
    }
    case Formula::Kind::kForAllPred: {
      std::string name = pred_prefix + std::to_string(pred_depth + 1);
      auto saved = pred_map.find(f.var()) != pred_map.end()
                       ? std::optional<std::string>(pred_map[f.var()])
                       : std::nullopt;
      pred_map[f.var()] = name;
      Formula body = canonicalize_rec(f.body(), obj_map, pred_map, obj_depth, pred_depth + 1,
                                      obj_prefix, pred_prefix);
      if (saved) pred_map[f.var()] = *saved; else pred_map.erase(f.var());
      return Formula::forall_pred(name, std::move(body));
    }
  }
  return f;
}

}  // namespace

Formula canonicalize_bound(const Formula& f) {
  std::map<std::string, std::string> om;
  std::map<std::string, std::string> pm;
  return canonicalize_rec(f, om, pm, 0, 0, "x", "Y");
}

bool alpha_equivalent(const Formula& a, const Formula& b) {
  // Prefixes that cannot collide with parsed identifiers.
  std::map<std::string, std::string> om1, pm1, om2, pm2;
  return canonicalize_rec(a, om1, pm1, 0, 0, "#x", "#Y") ==
         canonicalize_rec(b, om2, pm2, 0, 0, "#x", "#Y");
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool starts_open(const std::string& s) {
  for (const char* kw : {"forall ", "forallp ", "exists ", "existsp ", "A ", "K "}) {
    if (s.rfind(kw, 0) == 0) return true;
  }
  return false;
}

std::string wrap(std::string s) { return starts_open(s) ? "(" + s + ")" : s; }

enum class Style { kPrimitive, kPretty, kKey };

std::string render_with(const Formula& f, Style style);

std::string render_atom(const Formula& f, Style style) {
  const PredHead& h = f.head();
  if (h.kind == HeadKind::kCombination) {
    if (style == Style::kKey) return "{" + h.name + "}(" + f.arg().name + ")";
    return "(" + render_with(h.combination->instantiate(f.arg()), style) + ")";
  }
  return h.name + "(" + f.arg().name + ")";
}

std::string render_with(const Formula& f, Style style) {
  using K = Formula::Kind;
  if (style == Style::kPretty) {
    if (f.kind() == K::kNot) {
      const Formula& c = f.body();
      if ((c.kind() == K::kForAllObj || c.kind() == K::kForAllPred) && c.body().kind() == K::kNot) {
        std::string kw = c.kind() == K::kForAllObj ? "exists " : "existsp ";
        return kw + c.var() + ". " + render_with(c.body().body(), style);
      }
      if (c.kind() == K::kAnd && c.lhs().kind() == K::kNot && c.rhs().kind() == K::kNot) {
        return "(" + wrap(render_with(c.lhs().body(), style)) + " | " +
               wrap(render_with(c.rhs().body(), style)) + ")";
      }
      if (c.kind() == K::kAnd && c.rhs().kind() == K::kNot) {
        return "(" + wrap(render_with(c.lhs(), style)) + " -> " +
               wrap(render_with(c.rhs().body(), style)) + ")";
      }
    }
    if (f.kind() == K::kAnd) {
      const Formula& l = f.lhs();
      const Formula& r = f.rhs();
      if (l.kind() == K::kNot && r.kind() == K::kNot && l.body().kind() == K::kAnd &&
          r.body().kind() == K::kAnd && l.body().rhs().kind() == K::kNot &&
          r.body().rhs().kind() == K::kNot && l.body().lhs() == r.body().rhs().body() &&
          r.body().lhs() == l.body().rhs().body()) {
        return "(" + wrap(render_with(l.body().lhs(), style)) + " <-> " +
               wrap(render_with(r.body().lhs(), style)) + ")";
      }
    }
  }
  switch (f.kind()) {
    case K::kAtom:
      return render_atom(f, style);
    case K::kNot:
      return "!" + wrap(render_with(f.body(), style));
    case K::kAnd:
      return "(" + wrap(render_with(f.lhs(), style)) + " & " + wrap(render_with(f.rhs(), style)) +
             ")";
    case K::kForAllObj:
      return "forall " + f.var() + ". " + render_with(f.body(), style);
    case K::kForAllPred:
      return "forallp " + f.var() + ". " + render_with(f.body(), style);
    case K::kAware:
      return "A " + std::to_string(f.agent()) + " " + render_with(f.body(), style);
    case K::kKnows:
      return "K " + std::to_string(f.agent()) + " " + render_with(f.body(), style);
  }
  return {};
}

}  // namespace

std::string render(const Formula& f) { return render_with(f, Style::kPrimitive); }
std::string render_pretty(const Formula& f) { return render_with(f, Style::kPretty); }
std::string render_key(const Formula& f) { return render_with(f, Style::kKey); }

}  // namespace awarekit
