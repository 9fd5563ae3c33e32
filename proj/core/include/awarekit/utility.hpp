#ifndef AWAREKIT_UTILITY_HPP
#define AWAREKIT_UTILITY_HPP

#include <optional>
#include <set>
#include <string>

#include "awarekit/model.hpp"

namespace awarekit {

struct Profile {
  std::set<std::string> props;
  std::set<std::string> cons;
  bool operator==(const Profile&) const = default;
  auto operator<=>(const Profile&) const = default;
};

// In-language predicates holding of d at w.
std::set<std::string> prop_profile(const Model& m, StateId w, const std::string& d);
// In-language concepts whose definition holds of d at w.
std::set<std::string> con_profile(const Model& m, StateId w, const std::string& d);
// Both profiles restricted to what agent i is aware of at w.
Profile aware_profile(const Model& m, int agent, StateId w, const std::string& d);

enum class Assumption {
  kA1,        // equal prop profiles => equal utility
  kA1Strong,  // equal prop and con profiles => equal utility
  kA2,        // equal aware prop and con profiles => equal utility
  kA3,        // equal aware prop profiles => equal utility
};

const char* assumption_name(Assumption a);

struct AssumptionWitness {
  int agent;
  StateId w1;
  std::string d1;
  StateId w2;
  std::string d2;
  Rational u1;
  Rational u2;
};

// First violation in lexicographic order of (agent, w1, d1, w2, d2), with
// states and objects in declared order. Requires an economy.
std::optional<AssumptionWitness> check_assumption(const Model& m, Assumption which);

}  // namespace awarekit

#endif  // AWAREKIT_UTILITY_HPP
