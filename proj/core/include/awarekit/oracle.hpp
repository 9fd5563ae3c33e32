#ifndef AWAREKIT_ORACLE_HPP
#define AWAREKIT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "awarekit/contracts.hpp"
#include "awarekit/model.hpp"
#include "awarekit/semantics.hpp"
#include "awarekit/utility.hpp"

namespace awarekit {

struct EnumerationBudget {
  std::size_t max_size = 4;
  int max_modal_depth = 1;
  // Object and predicate quantifiers together.
  int max_quantifier_nesting = 1;
  // Predicate quantifiers alone; 0 keeps the search first-order.
  int max_pred_quantifier_nesting = 0;
  int agents = 2;
};

// Every sentence over the slice within budget, once each, ordered by AST
// size. Bound variables are named x1, x2, ... / Y1, Y2, ... by depth, binders
// are never vacuous, and of each commuted conjunction only one order is kept.
std::vector<Formula> enumerate_sentences(const Signature& sig, const LanguageSlice& slice,
                                         const EnumerationBudget& budget);

// Least enumerated sentence true at exactly one of w1, w2. Sentences the
// evaluator rejects on budget grounds are skipped. nullopt is inconclusive.
std::optional<Formula> distinguish(Evaluator& ev, StateId w1, StateId w2,
                                   const LanguageSlice& slice, const EnumerationBudget& budget);

// Variant taking a pre-enumerated sentence list.
std::optional<Formula> distinguish_among(Evaluator& ev, StateId w1, StateId w2,
                                         const std::vector<Formula>& sentences);

struct SearchEntry {
  std::vector<std::size_t> assignment;  // pair index per cell
  Rational u1;                          // at w*
  Rational u2;
  bool efficient_at_star = false;
};

struct SearchResult {
  std::vector<Pair> pairs;
  std::size_t assignments = 0;
  // Assignments acceptable to both agents at w*.
  std::size_t acceptable = 0;
  // Acceptable assignments that are also efficient at w*.
  std::size_t acceptable_and_efficient = 0;
  std::optional<SearchEntry> first_acceptable_and_efficient;
  // Pareto frontier at w* among acceptable assignments; one entry (the first
  // found) per utility point.
  std::vector<SearchEntry> frontier;
  std::optional<SearchEntry> best_welfare;
};

// Brute force over every map from cells to endowment pairs. Caps: 6 cells,
// 4 objects (Error("SearchCapExceeded")). Every state of K_1(w*) u K_2(w*)
// must lie in some cell.
SearchResult exhaustive_contract_search(const Model& m, StateId w_star, const CellPartition& cells);

// Whether (v1, v2) Pareto-dominates (u1, u2).
bool pareto_dominates(const Rational& v1, const Rational& v2, const Rational& u1, const Rational& u2);

struct ModelDims {
  std::size_t states = 3;
  std::size_t predicates = 3;
  std::size_t objects = 2;
  std::size_t concepts = 1;
  int agents = 2;
  // Probability that a symbol is left out of a state's language.
  double drop_language = 0.15;
  // Both agents share one awareness set on every cell meeting K_1(w*) u K_2(w*).
  bool constant_awareness_on_w = false;
  // A_1(w*) = A_2(w*).
  bool common_awareness_at_star = false;
  StateId w_star = 0;
  bool with_economy = true;
};

// Passes every structural validator. Utilities, when requested, are zero
// until random_utilities fills them.
Model random_model(std::uint64_t seed, const ModelDims& dims);

// Utilities factoring through the profile map named by the assumption, with
// small rational values so ties are common. Also draws endowments.
void random_utilities(Model& m, std::uint64_t seed, Assumption assumption);

}  // namespace awarekit

#endif  // AWAREKIT_ORACLE_HPP
