#ifndef AWAREKIT_PARSER_HPP
#define AWAREKIT_PARSER_HPP

#include <string_view>

#include "awarekit/formula.hpp"
#include "awarekit/signature.hpp"

namespace awarekit {

// Grammar (ASCII):
//   formula := '!' formula | formula '&' formula | formula '|' formula
//            | formula '->' formula | formula '<->' formula
//            | ('forall'|'exists'|'forallp'|'existsp') IDENT '.' formula
//            | ('A'|'K') INT formula | IDENT '(' IDENT ')' | '(' formula ')'
// Precedence ! > & > | > -> (right-assoc) > <->. Binders and modalities
// take the whole formula to their right.
//
// Declared names win. Any other lowercase identifier is an object variable
// and any other uppercase identifier a predicate variable; a binder fixes
// the sort of its variable inside its scope.
//
// Errors are ParseError with codes LexError, SyntaxError,
// UnresolvedIdentifier, ArityMisuse and BadAgent.
Formula parse(std::string_view text, const Signature& sig);

// Argument-free Boolean combination of declared predicates, e.g. "P & !Q".
// Returns a template over BooleanConcept::kPlaceholder.
Formula parse_combination(std::string_view text, const Signature& sig);

}  // namespace awarekit

#endif  // AWAREKIT_PARSER_HPP
