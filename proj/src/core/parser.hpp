#pragma once

#include <string_view>

#include "poly.hpp"

namespace folham {

// Parses a coefficient expression over the given coordinates.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := ident | int | int '/' uint | '(' expr ')' | '-' atom
//
// Whitespace is insignificant. Throws ParseError (with a 0-based character
// position) on malformed text and InputError for unknown identifiers.
Poly parse_poly(std::string_view text, const VariablesPtr& vars);

}  // namespace folham
