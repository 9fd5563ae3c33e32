#ifndef AWAREKIT_SEMANTICS_HPP
#define AWAREKIT_SEMANTICS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "awarekit/bool_concept.hpp"
#include "awarekit/formula.hpp"
#include "awarekit/model.hpp"

namespace awarekit {

struct EvalOptions {
  // Maximum nesting of predicate quantifiers in an evaluated sentence.
  int max_pred_nesting = 2;
  // Maximum |P_w| at a state where a predicate quantifier is evaluated.
  std::size_t max_preds = 4;
  // Admit the two empty-support combinations in the predicate-quantifier range.
  bool allow_trivial = false;
  bool memoize = true;
  // Substitute combinations as formula syntax instead of inline heads.
  // Slower; exists to cross-check the default route.
  bool expand_substitution = false;
};

bool in_language(const Formula& f, const LanguageSlice& slice);

struct Validity {
  bool valid = true;
  // No state's language contains the sentence.
  bool vacuous = true;
  std::optional<StateId> counter_state;
  std::size_t states_checked = 0;
};

// Model checker over one model. Not thread-safe (owns a cache); the model
// must outlive it.
class Evaluator {
 public:
  explicit Evaluator(const Model& m, EvalOptions options = {});

  // Throws Error("NotASentence"), Error("BudgetExceeded") or
  // Error("EnumerationCapExceeded").
  bool sat(StateId w, const Formula& f);
  Validity valid_in_model(const Formula& f);

  const Model& model() const { return m_; }
  const EvalOptions& options() const { return options_; }
  std::size_t cache_size() const { return cache_.size(); }
  void clear_cache() { cache_.clear(); }

 private:
  struct Key {
    StateId w;
    Formula f;
    bool operator==(const Key& o) const { return w == o.w && f == o.f; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.f.hash() * 31 + k.w; }
  };

  void check_budget(const Formula& f) const;
  bool eval(StateId w, const Formula& f);
  bool eval_uncached(StateId w, const Formula& f);
  const std::vector<std::shared_ptr<const BooleanConcept>>& representatives(StateId w);

  const Model& m_;
  EvalOptions options_;
  std::unordered_map<Key, bool, KeyHash> cache_;
  std::vector<std::optional<std::vector<std::shared_ptr<const BooleanConcept>>>> reps_;
};

}  // namespace awarekit

#endif  // AWAREKIT_SEMANTICS_HPP
