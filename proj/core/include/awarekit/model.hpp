#ifndef AWAREKIT_MODEL_HPP
#define AWAREKIT_MODEL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "awarekit/bool_concept.hpp"
#include "awarekit/rational.hpp"
#include "awarekit/signature.hpp"

namespace awarekit {

using StateId = std::size_t;

// Predicate and concept symbols; objects are always implicitly present.
struct LanguageSlice {
  std::set<std::string> predicates;
  std::set<std::string> concepts;

  bool contains(const Symbols& s) const;
  bool subset_of(const LanguageSlice& other) const;
  LanguageSlice intersect(const LanguageSlice& other) const;
  bool operator==(const LanguageSlice&) const = default;
};

// Two-agent exchange economy on top of a model.
struct Economy {
  // utilities[agent - 1][state][object index]
  std::vector<std::vector<std::vector<Rational>>> utilities;
  // Sorted, disjoint, nonempty.
  std::vector<std::string> endow1;
  std::vector<std::string> endow2;

  const std::vector<std::string>& endowment(int agent) const { return agent == 1 ? endow1 : endow2; }
};

struct Model {
  Signature sig;
  std::vector<std::string> states;
  std::vector<LanguageSlice> language;                // per state
  std::vector<std::vector<LanguageSlice>> awareness;  // [agent - 1][state]
  // [agent - 1] -> cells; each cell sorted, cells ordered by least state.
  std::vector<std::vector<std::vector<StateId>>> partitions;
  // [state] -> predicate in language -> extension.
  std::vector<std::map<std::string, std::set<std::string>>> extensions;
  // [state] -> concept in language -> definition.
  std::vector<std::map<std::string, BooleanConcept>> concept_defs;
  std::optional<Economy> economy;

  // Validates the structural invariants and builds the cell index. Awareness
  // constancy on cells is checked only when require_constancy is set.
  // Throws Error with codes BadSignature, NotAPartition, UnknownSymbol,
  // AwarenessExceedsLanguage, ExtensionsIncomplete, ExtensionOutOfLanguage,
  // ConceptDefsIncomplete, ConceptDefOutOfLanguage, ConceptDefExceedsLanguage,
  // AwarenessNotConstant, BadEconomy.
  void finalize(bool require_constancy = true);

  std::size_t num_states() const { return states.size(); }
  StateId state_index(std::string_view name) const;
  const std::vector<StateId>& cell(int agent, StateId w) const;
  std::size_t cell_index(int agent, StateId w) const { return cell_of_[agent - 1][w]; }
  const LanguageSlice& aware(int agent, StateId w) const { return awareness[agent - 1][w]; }
  // In-language predicates at w, in declared order.
  std::vector<std::string> predicates_at(StateId w) const;
  bool holds(StateId w, const std::string& pred, const std::string& obj) const;
  const Rational& utility(int agent, StateId w, const std::string& obj) const;
  const Economy& require_economy() const;

 private:
  std::vector<std::vector<std::size_t>> cell_of_;
};

struct ConstancyViolation {
  int agent;
  StateId w1;
  StateId w2;
};

// Pairs (i, w, w') with w' in i's cell at w and A_i(w) != A_i(w'); for each
// cell only the comparison against its least state is reported.
std::vector<ConstancyViolation> awareness_constancy_violations(const Model& m);

}  // namespace awarekit

#endif  // AWAREKIT_MODEL_HPP
