#include "awarekit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>
#include <vector>

#include "awarekit/bool_concept.hpp"
#include "awarekit/error.hpp"

namespace awarekit {

bool Signature::is_object(std::string_view s) const {
  return std::find(objects.begin(), objects.end(), s) != objects.end();
}

bool Signature::is_predicate(std::string_view s) const {
  return std::find(predicates.begin(), predicates.end(), s) != predicates.end();
}

bool Signature::is_concept(std::string_view s) const {
  return std::find(concepts.begin(), concepts.end(), s) != concepts.end();
}

std::size_t Signature::object_index(std::string_view s) const {
  auto it = std::find(objects.begin(), objects.end(), s);
  if (it == objects.end()) throw Error("UnknownObject", std::string(s));
  return static_cast<std::size_t>(it - objects.begin());
}

void Signature::validate() const {
  if (objects.empty()) throw Error("BadSignature", "no objects declared");
  if (agents < 1) throw Error("BadSignature", "at least one agent is required");
  std::set<std::string> seen;
  for (const auto* list : {&objects, &predicates, &concepts}) {
    for (const auto& s : *list) {
      if (!seen.insert(s).second) throw Error("BadSignature", "duplicate symbol " + s);
    }
  }
}

namespace {

enum class Tok { kIdent, kInt, kLParen, kRParen, kDot, kComma, kNot, kAnd, kOr, kImp, kIff, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::kInt, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::kIff, "<->", start});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::kImp, "->", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::kLParen; break;
      case ')': k = Tok::kRParen; break;
      case '.': k = Tok::kDot; break;
      case ',': k = Tok::kComma; break;
      case '!': k = Tok::kNot; break;
      case '&': k = Tok::kAnd; break;
      case '|': k = Tok::kOr; break;
      default:
        throw ParseError("LexError", std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

bool is_upper(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])) != 0; }

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "forallp" || s == "existsp";
}

enum class Sort { kObject, kPredicate };

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, bool combination)
      : toks_(lex(text)), sig_(sig), combination_(combination) {}

  Formula run() {
    Formula f = iff();
    if (peek().kind != Tok::kEnd) fail("SyntaxError", "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& code, const std::string& msg) const {
    throw ParseError(code, msg, peek().offset);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) {
      fail("SyntaxError", std::string("expected ") + what +
                              (peek().kind == Tok::kEnd ? " at end of input"
                                                        : ", found '" + peek().text + "'"));
    }
    next();
  }

  const Sort* lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  Formula iff() {
    Formula l = imp();
    while (peek().kind == Tok::kIff) {
      next();
      l = Formula::equivalence(l, imp());
    }
    return l;
  }

  Formula imp() {
    Formula l = disj();
    if (peek().kind == Tok::kImp) {
      next();
      return Formula::implication(l, imp());
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (peek().kind == Tok::kOr) {
      next();
      l = Formula::disjunction(l, conj());
    }
    return l;
  }

  Formula conj() {
    Formula l = unary();
    while (peek().kind == Tok::kAnd) {
      next();
      l = Formula::conjunction(l, unary());
    }
    return l;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNot:
        next();
        return Formula::negation(unary());
      case Tok::kLParen: {
        next();
        Formula f = iff();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kIdent:
        break;
      case Tok::kEnd:
        fail("SyntaxError", "unexpected end of input");
      default:
        fail("SyntaxError", "unexpected '" + t.text + "'");
    }
    if (!combination_) {
      if (is_keyword(t.text)) return binder();
      if ((t.text == "A" || t.text == "K") && peek(1).kind == Tok::kInt) return modality();
    }
    return atom();
  }

  Formula binder() {
    std::string kw = next().text;
    const Token& v = peek();
    if (v.kind != Tok::kIdent || is_keyword(v.text)) fail("SyntaxError", "expected a variable after " + kw);
    std::string name = v.text;
    if (sig_.is_object(name) || sig_.is_predicate(name) || sig_.is_concept(name)) {
      fail("SyntaxError", "cannot bind declared symbol " + name);
    }
    next();
    expect(Tok::kDot, "'.'");
    bool pred = kw == "forallp" || kw == "existsp";
    scope_.emplace_back(name, pred ? Sort::kPredicate : Sort::kObject);
    Formula body = iff();
    scope_.pop_back();
    if (kw == "forall") return Formula::forall_obj(name, body);
    if (kw == "exists") return Formula::exists_obj(name, body);
    if (kw == "forallp") return Formula::forall_pred(name, body);
    return Formula::exists_pred(name, body);
  }

  Formula modality() {
    bool aware = next().text == "A";
    const Token& n = peek();
    int agent = 0;
    try {
      agent = n.text.size() > 6 ? -1 : std::stoi(n.text);
    } catch (const std::exception&) {
      agent = -1;
    }
    if (agent < 1 || agent > sig_.agents) {
      fail("BadAgent", "agent " + n.text + " is not in 1.." + std::to_string(sig_.agents));
    }
    next();
    Formula body = iff();
    return aware ? Formula::aware(agent, body) : Formula::knows(agent, body);
  }

  PredHead resolve_head(const std::string& name) const {
    if (const Sort* s = lookup(name)) {
      if (*s == Sort::kObject) fail("ArityMisuse", "object variable " + name + " used as a predicate");
      return PredHead::variable(name);
    }
    if (sig_.is_predicate(name)) return PredHead::predicate(name);
    if (sig_.is_concept(name)) {
      if (combination_) fail("SyntaxError", "concept " + name + " inside a combination");
      return PredHead::concept_symbol(name);
    }
    if (sig_.is_object(name)) fail("ArityMisuse", "object " + name + " used as a predicate");
    if (combination_ || !is_upper(name)) fail("UnresolvedIdentifier", "unknown predicate " + name);
    return PredHead::variable(name);
  }

  ObjTerm resolve_arg(const std::string& name) const {
    if (const Sort* s = lookup(name)) {
      if (*s == Sort::kPredicate) fail("ArityMisuse", "predicate variable " + name + " used as an object");
      return ObjTerm::variable(name);
    }
    if (sig_.is_object(name)) return ObjTerm::standard_name(name);
    if (sig_.is_predicate(name) || sig_.is_concept(name)) {
      fail("ArityMisuse", name + " used as an object");
    }
    if (is_upper(name)) fail("UnresolvedIdentifier", "unknown object " + name);
    return ObjTerm::variable(name);
  }

  Formula atom() {
    std::string name = peek().text;
    if (is_keyword(name)) fail("SyntaxError", "unexpected keyword " + name);
    PredHead head = resolve_head(name);
    next();
    if (combination_) {
      if (peek().kind == Tok::kLParen && peek(1).kind == Tok::kIdent) {
        fail("ArityMisuse", "combinations are written without arguments");
      }
      return Formula::atom(std::move(head), ObjTerm::variable(BooleanConcept::kPlaceholder));
    }
    if (peek().kind != Tok::kLParen) fail("ArityMisuse", name + " needs exactly one argument");
    next();
    if (peek().kind != Tok::kIdent) {
      if (peek().kind == Tok::kRParen) fail("ArityMisuse", name + " needs exactly one argument");
      fail("SyntaxError", "expected an object");
    }
    ObjTerm arg = resolve_arg(peek().text);
    next();
    if (peek().kind == Tok::kComma) fail("ArityMisuse", "predicates take a single argument");
    expect(Tok::kRParen, "')'");
    return Formula::atom(std::move(head), std::move(arg));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  bool combination_;
  std::vector<std::pair<std::string, Sort>> scope_;
};

}  // namespace

Formula parse(std::string_view text, const Signature& sig) { return Parser(text, sig, false).run(); }

Formula parse_combination(std::string_view text, const Signature& sig) {
  return Parser(text, sig, true).run();
}

}  // namespace awarekit
