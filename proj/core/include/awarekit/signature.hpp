#ifndef AWAREKIT_SIGNATURE_HPP
#define AWAREKIT_SIGNATURE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace awarekit {

// Declared symbols. Objects are standard names and denote themselves.
struct Signature {
  std::vector<std::string> objects;
  std::vector<std::string> predicates;
  std::vector<std::string> concepts;
  int agents = 2;

  bool is_object(std::string_view s) const;
  bool is_predicate(std::string_view s) const;
  bool is_concept(std::string_view s) const;
  std::size_t object_index(std::string_view s) const;

  // Throws Error("BadSignature") on duplicates, an empty object list or
  // agents < 1.
  void validate() const;
};

}  // namespace awarekit

#endif  // AWAREKIT_SIGNATURE_HPP
