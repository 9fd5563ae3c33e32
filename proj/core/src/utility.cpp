#include "awarekit/utility.hpp"

#include <vector>

namespace awarekit {

std::set<std::string> prop_profile(const Model& m, StateId w, const std::string& d) {
  std::set<std::string> out;
  for (const auto& p : m.language[w].predicates) {
    if (m.holds(w, p, d)) out.insert(p);
  }
  return out;
}

std::set<std::string> con_profile(const Model& m, StateId w, const std::string& d) {
  std::set<std::string> out;
  for (const auto& c : m.language[w].concepts) {
    const BooleanConcept& def = m.concept_defs[w].at(c);
    if (def.evaluate([&](const std::string& p) { return m.holds(w, p, d); })) out.insert(c);
  }
  return out;
}

Profile aware_profile(const Model& m, int agent, StateId w, const std::string& d) {
  const LanguageSlice& a = m.aware(agent, w);
  Profile out;
  for (const auto& p : prop_profile(m, w, d)) {
    if (a.predicates.contains(p)) out.props.insert(p);
  }
  for (const auto& c : con_profile(m, w, d)) {
    if (a.concepts.contains(c)) out.cons.insert(c);
  }
  return out;
}

const char* assumption_name(Assumption a) {
  switch (a) {
    case Assumption::kA1: return "A1";
    case Assumption::kA1Strong: return "A1Strong";
    case Assumption::kA2: return "A2";
    case Assumption::kA3: return "A3";
  }
  return "?";
}

std::optional<AssumptionWitness> check_assumption(const Model& m, Assumption which) {
  m.require_economy();
  const auto& objs = m.sig.objects;
  const std::size_t n = m.num_states();
  for (int i = 1; i <= 2; ++i) {
    // profiles[w][k] for agent i under the chosen assumption.
    std::vector<std::vector<Profile>> profiles(n, std::vector<Profile>(objs.size()));
    for (StateId w = 0; w < n; ++w) {
      for (std::size_t k = 0; k < objs.size(); ++k) {
        Profile p;
        switch (which) {
          case Assumption::kA1:
            p.props = prop_profile(m, w, objs[k]);
            break;
          case Assumption::kA1Strong:
            p.props = prop_profile(m, w, objs[k]);
            p.cons = con_profile(m, w, objs[k]);
            break;
          case Assumption::kA2:
            p = aware_profile(m, i, w, objs[k]);
            break;
          case Assumption::kA3:
            p.props = aware_profile(m, i, w, objs[k]).props;
            break;
        }
        profiles[w][k] = std::move(p);
      }
    }
    const auto& u = m.economy->utilities[i - 1];
    for (StateId w = 0; w < n; ++w) {
      for (std::size_t k = 0; k < objs.size(); ++k) {
        for (StateId v = 0; v < n; ++v) {
          for (std::size_t l = 0; l < objs.size(); ++l) {
            if (profiles[w][k] == profiles[v][l] && u[w][k] != u[v][l]) {
              return AssumptionWitness{i, w, objs[k], v, objs[l], u[w][k], u[v][l]};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace awarekit
