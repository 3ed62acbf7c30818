#pragma once

#include <string>
#include <string_view>

#include "guess/ast.hpp"
#include "guess/signature.hpp"

namespace guess {

// Grammar (whitespace-insensitive):
//
//   formula := 'forall' VAR '.' formula | 'exists' VAR '.' formula | imp
//   imp     := disj [ '->' imp ]
//   disj    := conj { '|' conj }
//   conj    := neg { '&' neg }
//   neg     := '!' neg | atom
//   atom    := term REL term | IDENT '(' term {',' term} ')' | '(' formula ')'
//   REL     := '=' | '<' | '>' | '<=' | '>='
//   term    := NAT | VAR | 'f' '(' term ')' | IDENT '(' term {',' term} ')'
//            | IDENT '[' term ':' VAR '..' term ']'
//
// `|` and `&` associate to the left, `->` to the right. `#` starts a comment
// that runs to the end of the line.
//
// Throws ParseError with a 1-based line and column.
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

// Parses and then checks every symbol against `sig` (SignatureError).
Formula parse_formula(std::string_view text, const Signature& sig);

std::string print(const Term& t);
std::string print(const Formula& f);

}  // namespace guess
