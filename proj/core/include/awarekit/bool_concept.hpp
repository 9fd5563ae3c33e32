#ifndef AWAREKIT_BOOL_CONCEPT_HPP
#define AWAREKIT_BOOL_CONCEPT_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "awarekit/formula.hpp"

namespace awarekit {

// A Boolean combination of predicate symbols, keyed by the set of predicates
// it mentions (its support) and its truth table over that support. Row r of
// the table assigns support[j] the value of bit j of r.
//
// Two combinations are equal iff their keys are equal. The optional shape is
// the syntactic template the combination was keyed from; it only affects
// rendering.
class BooleanConcept {
 public:
  // Object variable used as the argument slot inside templates.
  static constexpr const char* kPlaceholder = "_";

  // support must be strictly increasing; table must have 2^|support| rows.
  static BooleanConcept from_table(std::vector<std::string> support, std::vector<bool> table);

  // tmpl is built from atoms P(_) with predicate heads using not/and only.
  static BooleanConcept from_template(const Formula& tmpl);

  const std::vector<std::string>& support() const { return support_; }
  const std::vector<bool>& table() const { return table_; }
  const std::optional<Formula>& shape() const { return shape_; }

  // Truth value given the truth of each support predicate.
  bool evaluate(const std::function<bool(const std::string&)>& holds) const;

  // Template with the placeholder argument; the shape when present.
  Formula formula_template() const;
  // Minterm (DNF) template mentioning every support predicate.
  Formula canonical_template() const;
  // Template with the placeholder replaced by arg.
  Formula instantiate(const ObjTerm& arg) const;

  // "P,Q:0110" style key, rows listed from index 0.
  std::string key() const;
  // Argument-free text such as "(P & !Q)"; parses back with parse_combination.
  std::string to_text() const;

  bool operator==(const BooleanConcept& other) const {
    return support_ == other.support_ && table_ == other.table_;
  }

 private:
  BooleanConcept() = default;
  std::vector<std::string> support_;
  std::vector<bool> table_;
  std::optional<Formula> shape_;
};

// True iff f is a not/and combination of predicate atoms applied to arg.
bool is_combination_over(const Formula& f, const ObjTerm& arg);
// Replaces the argument of every atom by the placeholder.
Formula to_template(const Formula& f);
// Renders a template as argument-free text.
std::string render_template(const Formula& tmpl);

struct BcOptions {
  std::size_t cap = 4;
  // Adds the two empty-support combinations (always true / always false).
  bool allow_trivial = false;
};

// One representative per (nonempty support S of preds, truth table over S):
// sum over S of 2^(2^|S|) entries. Ordered by support size, then support in
// lexicographic combination order, then table read as a binary number.
// Throws Error("EnumerationCapExceeded") when |preds| > cap.
std::vector<BooleanConcept> enumerate_bc(std::span<const std::string> preds,
                                         const BcOptions& options = {});

// Closed-form count of enumerate_bc(preds).size() for n predicates.
std::size_t bc_count(std::size_t n, bool allow_trivial = false);

}  // namespace awarekit

#endif  // AWAREKIT_BOOL_CONCEPT_HPP
