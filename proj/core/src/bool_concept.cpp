#include "awarekit/bool_concept.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "awarekit/error.hpp"

namespace awarekit {

namespace {

const ObjTerm& placeholder() {
  static const ObjTerm t = ObjTerm::variable(BooleanConcept::kPlaceholder);
  return t;
}

// Template of the always-true combination over no predicates.
Formula top_template() {
  return Formula::aware(1, Formula::forall_pred("Z", Formula::atom(PredHead::variable("Z"),
                                                                   placeholder())));
}

bool eval_template(const Formula& t, const std::map<std::string, bool>& val) {
  switch (t.kind()) {
    case Formula::Kind::kAtom:
      return val.at(t.head().name);
    case Formula::Kind::kNot:
      return !eval_template(t.body(), val);
    case Formula::Kind::kAnd:
      return eval_template(t.lhs(), val) && eval_template(t.rhs(), val);
    default:
      throw Error("NotACombination", "templates use predicate atoms, not and and only");
  }
}

void template_predicates(const Formula& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Formula::Kind::kAtom:
      if (t.head().kind != HeadKind::kPredicate || t.arg() != placeholder()) {
        throw Error("NotACombination", "template atom " + render(t));
      }
      out.insert(t.head().name);
      return;
    case Formula::Kind::kNot:
      template_predicates(t.body(), out);
      return;
    case Formula::Kind::kAnd:
      template_predicates(t.lhs(), out);
      template_predicates(t.rhs(), out);
      return;
    default:
      throw Error("NotACombination", "templates use predicate atoms, not and and only");
  }
}

}  // namespace

BooleanConcept BooleanConcept::from_table(std::vector<std::string> support,
                                          std::vector<bool> table) {
  for (std::size_t i = 1; i < support.size(); ++i) {
    if (!(support[i - 1] < support[i])) {
      throw Error("BadCombination", "support must be strictly increasing");
    }
  }
  if (support.size() > 20 || table.size() != (std::size_t{1} << support.size())) {
    throw Error("BadCombination", "truth table size does not match support");
  }
  BooleanConcept bc;
  bc.support_ = std::move(support);
  bc.table_ = std::move(table);
  return bc;
}

BooleanConcept BooleanConcept::from_template(const Formula& tmpl) {
  if (tmpl == top_template()) return from_table({}, {true});
  if (tmpl.kind() == Formula::Kind::kNot && tmpl.body() == top_template()) {
    return from_table({}, {false});
  }
  std::set<std::string> preds;
  template_predicates(tmpl, preds);
  std::vector<std::string> support(preds.begin(), preds.end());
  std::vector<bool> table(std::size_t{1} << support.size());
  std::map<std::string, bool> val;
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t j = 0; j < support.size(); ++j) val[support[j]] = ((r >> j) & 1U) != 0;
    table[r] = eval_template(tmpl, val);
  }
  BooleanConcept bc = from_table(std::move(support), std::move(table));
  bc.shape_ = tmpl;
  return bc;
}

bool BooleanConcept::evaluate(const std::function<bool(const std::string&)>& holds) const {
  std::size_t r = 0;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    if (holds(support_[j])) r |= std::size_t{1} << j;
  }
  return table_[r];
}

Formula BooleanConcept::formula_template() const {
  return shape_ ? *shape_ : canonical_template();
}

Formula BooleanConcept::canonical_template() const {
  if (support_.empty()) {
    return table_[0] ? top_template() : Formula::negation(top_template());
  }
  auto lit = [](const std::string& p, bool positive) {
    Formula a = Formula::atom(PredHead::predicate(p), placeholder());
    return positive ? a : Formula::negation(a);
  };
  std::vector<Formula> minterms;
  for (std::size_t r = 0; r < table_.size(); ++r) {
    if (!table_[r]) continue;
    std::vector<Formula> lits;
    for (std::size_t j = 0; j < support_.size(); ++j) lits.push_back(lit(support_[j], (r >> j) & 1U));
    minterms.push_back(Formula::conjunction_of(lits));
  }
  if (minterms.empty()) {
    std::vector<Formula> contradictions;
    for (const auto& p : support_) {
      contradictions.push_back(Formula::conjunction(lit(p, true), lit(p, false)));
    }
    return Formula::conjunction_of(contradictions);
  }
  return Formula::disjunction_of(minterms);
}

Formula BooleanConcept::instantiate(const ObjTerm& arg) const {
  return substitute_obj(formula_template(), kPlaceholder, arg);
}

std::string BooleanConcept::key() const {
  std::string out;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    if (j) out += ',';
    out += support_[j];
  }
  out += ':';
  for (bool b : table_) out += b ? '1' : '0';
  return out;
}

std::string BooleanConcept::to_text() const { return render_template(formula_template()); }

bool is_combination_over(const Formula& f, const ObjTerm& arg) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f.head().kind == HeadKind::kPredicate && f.arg() == arg;
    case Formula::Kind::kNot:
      return is_combination_over(f.body(), arg);
    case Formula::Kind::kAnd:
      return is_combination_over(f.lhs(), arg) && is_combination_over(f.rhs(), arg);
    default:
      return false;
  }
}

Formula to_template(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return Formula::atom(f.head(), placeholder());
    case Formula::Kind::kNot:
      return Formula::negation(to_template(f.body()));
    case Formula::Kind::kAnd:
      return Formula::conjunction(to_template(f.lhs()), to_template(f.rhs()));
    default:
      throw Error("NotACombination", render(f));
  }
}

std::string render_template(const Formula& tmpl) {
  std::string s = render_pretty(tmpl);
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "(_)") == 0) {
      i += 2;
      continue;
    }
    out += s[i];
  }
  return out;
}

std::vector<BooleanConcept> enumerate_bc(std::span<const std::string> preds,
                                         const BcOptions& options) {
  if (preds.size() > options.cap) {
    throw Error("EnumerationCapExceeded", std::to_string(preds.size()) +
                                              " predicates exceed the cap of " +
                                              std::to_string(options.cap));
  }
  std::vector<std::string> sorted(preds.begin(), preds.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t n = sorted.size();

  std::vector<BooleanConcept> out;
  out.reserve(bc_count(n, options.allow_trivial));
  if (options.allow_trivial) {
    out.push_back(BooleanConcept::from_table({}, {false}));
    out.push_back(BooleanConcept::from_table({}, {true}));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    // Lexicographic k-combinations via index vector.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<std::string> support;
      for (std::size_t i : idx) support.push_back(sorted[i]);
      const std::size_t rows = std::size_t{1} << k;
      const std::uint64_t tables = std::uint64_t{1} << rows;
      for (std::uint64_t t = 0; t < tables; ++t) {
        std::vector<bool> table(rows);
        for (std::size_t r = 0; r < rows; ++r) table[r] = ((t >> (rows - 1 - r)) & 1U) != 0;
        out.push_back(BooleanConcept::from_table(support, std::move(table)));
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::size_t bc_count(std::size_t n, bool allow_trivial) {
  std::size_t total = allow_trivial ? 2 : 0;
  std::size_t choose = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    choose = choose * (n - k + 1) / k;
    total += choose * (std::size_t{1} << (std::size_t{1} << k));
  }
  return total;
}

}  // namespace awarekit
