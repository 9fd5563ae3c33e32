#ifndef AWAREKIT_FORMULA_HPP
#define AWAREKIT_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace awarekit {

class BooleanConcept;

enum class HeadKind {
  kPredicate,
  kConcept,
  kVariable,
  // A Boolean combination standing in for a substituted predicate variable.
  // Produced only by evaluation-time substitution; never by the parser.
  kCombination,
};

struct PredHead {
  HeadKind kind = HeadKind::kPredicate;
  std::string name;
  std::shared_ptr<const BooleanConcept> combination;

  static PredHead predicate(std::string n) { return {HeadKind::kPredicate, std::move(n), nullptr}; }
  static PredHead concept_symbol(std::string n) { return {HeadKind::kConcept, std::move(n), nullptr}; }
  static PredHead variable(std::string n) { return {HeadKind::kVariable, std::move(n), nullptr}; }
  static PredHead combination_of(std::shared_ptr<const BooleanConcept> bc);

  bool operator==(const PredHead& other) const;
};

enum class TermKind { kName, kVariable };

struct ObjTerm {
  TermKind kind = TermKind::kName;
  std::string name;

  static ObjTerm standard_name(std::string n) { return {TermKind::kName, std::move(n)}; }
  static ObjTerm variable(std::string n) { return {TermKind::kVariable, std::move(n)}; }

  bool is_variable() const { return kind == TermKind::kVariable; }
  bool operator==(const ObjTerm&) const = default;
};

// Immutable formula over the primitives atom, not, and, forall over objects,
// forall over predicates, awareness and explicit knowledge. Derived
// connectives are desugared by the parser. Copies share structure.
class Formula {
 public:
  enum class Kind { kAtom, kNot, kAnd, kForAllObj, kForAllPred, kAware, kKnows };

  static Formula atom(PredHead head, ObjTerm arg);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula forall_obj(std::string var, Formula body);
  static Formula forall_pred(std::string var, Formula body);
  static Formula aware(int agent, Formula body);
  static Formula knows(int agent, Formula body);

  // Sugar, expanded into the primitives above.
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula exists_obj(std::string var, Formula body);
  static Formula exists_pred(std::string var, Formula body);
  // Left-nested conjunction of a nonempty list.
  static Formula conjunction_of(const std::vector<Formula>& parts);
  // Desugared disjunction of a nonempty list; a single element is returned as is.
  static Formula disjunction_of(const std::vector<Formula>& parts);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_binder() const { return kind() == Kind::kForAllObj || kind() == Kind::kForAllPred; }
  bool is_modal() const { return kind() == Kind::kAware || kind() == Kind::kKnows; }

  const PredHead& head() const;
  const ObjTerm& arg() const;
  // Sole child of not, binders and modalities.
  const Formula& body() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const std::string& var() const;
  int agent() const;

  std::size_t size() const;
  std::size_t hash() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct Symbols {
  std::set<std::string> predicates;
  std::set<std::string> concepts;
  std::set<std::string> objects;
  std::set<std::string> free_obj_vars;
  std::set<std::string> free_pred_vars;

  bool is_sentence() const { return free_obj_vars.empty() && free_pred_vars.empty(); }
};

Symbols symbols_of(const Formula& f);
bool is_sentence(const Formula& f);
bool occurs_free_obj(const Formula& f, const std::string& var);
bool occurs_free_pred(const Formula& f, const std::string& var);

// Nesting depth of predicate quantifiers.
int pred_quantifier_depth(const Formula& f);
int modal_depth(const Formula& f);

// f[x/t]: replaces free occurrences of object variable x.
Formula substitute_obj(const Formula& f, const std::string& var, const ObjTerm& term);

// f[Y/psi]: every free atom Y(t) becomes psi rendered with argument t.
Formula substitute_pred(const Formula& f, const std::string& var, const BooleanConcept& psi);

// Same as substitute_pred but keeps psi as a combination head instead of
// expanding it into formula syntax. Used by the model checker.
Formula substitute_pred_inline(const Formula& f, const std::string& var,
                               std::shared_ptr<const BooleanConcept> psi);

// Outcome of replacing a symbol by a variable (the generalisation rules).
struct Abstraction {
  std::optional<Formula> result;
  std::string failure;  // "Capture" when the variable would be captured.
};

// f[c/x]: replaces the standard name c by object variable x.
Abstraction abstract_name(const Formula& f, const std::string& name, const std::string& var);
// f[P/X]: replaces predicate symbol P by predicate variable X.
Abstraction abstract_predicate(const Formula& f, const std::string& pred, const std::string& var);

// Renames every bound variable to a canonical name (x1, x2, ... for objects,
// Y1, Y2, ... for predicates) by binding depth.
Formula canonicalize_bound(const Formula& f);
bool alpha_equivalent(const Formula& a, const Formula& b);

// Primitive syntax only; parse(render(f)) == f.
std::string render(const Formula& f);
// Re-sugars |, -> and exists where the desugared shape allows; still round-trips.
std::string render_pretty(const Formula& f);
// Compact key used by evaluation caches. Not parseable.
std::string render_key(const Formula& f);

}  // namespace awarekit

#endif  // AWAREKIT_FORMULA_HPP
