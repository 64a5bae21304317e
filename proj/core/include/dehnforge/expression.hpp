#pragma once

#include <string_view>

#include "dehnforge/scalar.hpp"

namespace dehnforge {

// Parses the exact-expression grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | variable | 'sqrt' '(' expr ')' | '(' expr ')'
// Variables are t, t1, ..., t9. Whitespace is ignored. Errors are ParseError
// with the zero-based offset in the witness.
Scalar parse_expression(std::string_view text);

}  // namespace dehnforge
