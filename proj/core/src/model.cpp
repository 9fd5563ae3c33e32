#include "awarekit/model.hpp"

#include <algorithm>

#include "awarekit/error.hpp"

namespace awarekit {

bool LanguageSlice::contains(const Symbols& s) const {
  for (const auto& p : s.predicates) {
    if (!predicates.contains(p)) return false;
  }
  for (const auto& c : s.concepts) {
    if (!concepts.contains(c)) return false;
  }
  return true;
}

bool LanguageSlice::subset_of(const LanguageSlice& other) const {
  return std::includes(other.predicates.begin(), other.predicates.end(), predicates.begin(),
                       predicates.end()) &&
         std::includes(other.concepts.begin(), other.concepts.end(), concepts.begin(),
                       concepts.end());
}

LanguageSlice LanguageSlice::intersect(const LanguageSlice& other) const {
  LanguageSlice out;
  std::set_intersection(predicates.begin(), predicates.end(), other.predicates.begin(),
                        other.predicates.end(), std::inserter(out.predicates, out.predicates.end()));
  std::set_intersection(concepts.begin(), concepts.end(), other.concepts.begin(),
                        other.concepts.end(), std::inserter(out.concepts, out.concepts.end()));
  return out;
}

namespace {

void check_slice_symbols(const Signature& sig, const LanguageSlice& s, const std::string& where) {
  for (const auto& p : s.predicates) {
    if (!sig.is_predicate(p)) throw Error("UnknownSymbol", p + " in " + where);
  }
  for (const auto& c : s.concepts) {
    if (!sig.is_concept(c)) throw Error("UnknownSymbol", c + " in " + where);
  }
}

}  // namespace

void Model::finalize(bool require_constancy) {
  sig.validate();
  const std::size_t n = states.size();
  if (n == 0) throw Error("BadModel", "no states");
  {
    std::set<std::string> seen(states.begin(), states.end());
    if (seen.size() != n) throw Error("BadModel", "duplicate state names");
    for (const auto& s : states) {
      if (sig.is_object(s) || sig.is_predicate(s) || sig.is_concept(s)) {
        throw Error("BadModel", "state name " + s + " clashes with a symbol");
      }
    }
  }
  const auto agents = static_cast<std::size_t>(sig.agents);
  if (language.size() != n) throw Error("BadModel", "language must list every state");
  for (StateId w = 0; w < n; ++w) check_slice_symbols(sig, language[w], "language(" + states[w] + ")");

  if (awareness.size() != agents) throw Error("BadModel", "awareness must list every agent");
  for (std::size_t i = 0; i < agents; ++i) {
    if (awareness[i].size() != n) throw Error("BadModel", "awareness must list every state");
    for (StateId w = 0; w < n; ++w) {
      check_slice_symbols(sig, awareness[i][w], "awareness");
      if (!awareness[i][w].subset_of(language[w])) {
        throw Error("AwarenessExceedsLanguage",
                    "(" + states[w] + ") agent " + std::to_string(i + 1) +
                        " is aware of symbols outside the language");
      }
    }
  }

  if (partitions.size() != agents) throw Error("BadModel", "partitions must list every agent");
  cell_of_.assign(agents, std::vector<std::size_t>(n, n));
  for (std::size_t i = 0; i < agents; ++i) {
    auto& cells = partitions[i];
    for (auto& c : cells) {
      if (c.empty()) throw Error("NotAPartition", "agent " + std::to_string(i + 1) + " has an empty cell");
      std::sort(c.begin(), c.end());
    }
    std::sort(cells.begin(), cells.end());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      for (StateId w : cells[k]) {
        if (w >= n || cell_of_[i][w] != n) {
          throw Error("NotAPartition", "agent " + std::to_string(i + 1) + " cells overlap");
        }
        cell_of_[i][w] = k;
      }
    }
    for (StateId w = 0; w < n; ++w) {
      if (cell_of_[i][w] == n) {
        throw Error("NotAPartition",
                    "agent " + std::to_string(i + 1) + " does not cover state " + states[w]);
      }
    }
  }

  if (extensions.size() != n) throw Error("BadModel", "extensions must list every state");
  for (StateId w = 0; w < n; ++w) {
    for (const auto& p : language[w].predicates) {
      if (!extensions[w].contains(p)) {
        throw Error("ExtensionsIncomplete", p + " at " + states[w]);
      }
    }
    for (const auto& [p, objs] : extensions[w]) {
      if (!language[w].predicates.contains(p)) {
        throw Error("ExtensionOutOfLanguage", p + " at " + states[w]);
      }
      for (const auto& d : objs) {
        if (!sig.is_object(d)) throw Error("UnknownSymbol", d + " in extension of " + p);
      }
    }
  }

  if (concept_defs.size() != n) throw Error("BadModel", "concept_defs must list every state");
  for (StateId w = 0; w < n; ++w) {
    for (const auto& c : language[w].concepts) {
      if (!concept_defs[w].contains(c)) throw Error("ConceptDefsIncomplete", c + " at " + states[w]);
    }
    for (const auto& [c, def] : concept_defs[w]) {
      if (!language[w].concepts.contains(c)) {
        throw Error("ConceptDefOutOfLanguage", c + " at " + states[w]);
      }
      for (const auto& p : def.support()) {
        if (!language[w].predicates.contains(p)) {
          throw Error("ConceptDefExceedsLanguage", c + " uses " + p + " at " + states[w]);
        }
      }
      if (def.support().empty()) {
        throw Error("ConceptDefExceedsLanguage", c + " has an empty support at " + states[w]);
      }
    }
  }

  if (require_constancy) {
    auto v = awareness_constancy_violations(*this);
    if (!v.empty()) {
      throw Error("AwarenessNotConstant", "agent " + std::to_string(v[0].agent) + " at " +
                                              states[v[0].w1] + " vs " + states[v[0].w2]);
    }
  }

  if (economy) {
    const Economy& e = *economy;
    if (sig.agents != 2) throw Error("BadEconomy", "economies need exactly two agents");
    if (e.utilities.size() != 2) throw Error("BadEconomy", "utilities must list both agents");
    for (const auto& per_state : e.utilities) {
      if (per_state.size() != n) throw Error("BadEconomy", "utilities must list every state");
      for (const auto& per_obj : per_state) {
        if (per_obj.size() != sig.objects.size()) {
          throw Error("BadEconomy", "utilities must list every object");
        }
      }
    }
    if (e.endow1.empty() || e.endow2.empty()) throw Error("BadEconomy", "endowments must be nonempty");
    for (const auto* endow : {&e.endow1, &e.endow2}) {
      if (!std::is_sorted(endow->begin(), endow->end()) ||
          std::adjacent_find(endow->begin(), endow->end()) != endow->end()) {
        throw Error("BadEconomy", "endowments must be sorted sets");
      }
      for (const auto& d : *endow) {
        if (!sig.is_object(d)) throw Error("BadEconomy", "unknown object " + d + " in endowment");
      }
    }
    for (const auto& d : e.endow1) {
      if (std::binary_search(e.endow2.begin(), e.endow2.end(), d)) {
        throw Error("BadEconomy", "endowments overlap on " + d);
      }
    }
  }
}

StateId Model::state_index(std::string_view name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw Error("UnknownState", std::string(name));
  return static_cast<StateId>(it - states.begin());
}

const std::vector<StateId>& Model::cell(int agent, StateId w) const {
  return partitions[agent - 1][cell_of_[agent - 1][w]];
}

std::vector<std::string> Model::predicates_at(StateId w) const {
  std::vector<std::string> out;
  for (const auto& p : sig.predicates) {
    if (language[w].predicates.contains(p)) out.push_back(p);
  }
  return out;
}

bool Model::holds(StateId w, const std::string& pred, const std::string& obj) const {
  auto it = extensions[w].find(pred);
  return it != extensions[w].end() && it->second.contains(obj);
}

const Rational& Model::utility(int agent, StateId w, const std::string& obj) const {
  return require_economy().utilities[agent - 1][w][sig.object_index(obj)];
}

const Economy& Model::require_economy() const {
  if (!economy) throw Error("NoEconomy", "the model has no utilities or endowments");
  return *economy;
}

std::vector<ConstancyViolation> awareness_constancy_violations(const Model& m) {
  std::vector<ConstancyViolation> out;
  for (int i = 1; i <= m.sig.agents; ++i) {
    for (const auto& cell : m.partitions[i - 1]) {
      for (std::size_t k = 1; k < cell.size(); ++k) {
        if (!(m.aware(i, cell[0]) == m.aware(i, cell[k]))) out.push_back({i, cell[0], cell[k]});
      }
    }
  }
  return out;
}

}  // namespace awarekit
