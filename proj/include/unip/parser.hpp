#pragma once

#include <string_view>

#include "unip/module_expr.hpp"

namespace unip {

/// Parses the module-expression grammar
///
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := atom suffix*
///   atom   := ('L'|'V'|'T') '(' nat ')' | '(' expr ')'
///   suffix := '^*' | '[' nat ']'
///
/// '+' and '*' are left-associative, suffixes apply left to right and bind
/// tighter than '*'. Whitespace is ignored. Twist exponents must be >= 1.
/// Throws ParseError with the offending position.
ExprPtr parse_expr(std::string_view text);

} // namespace unip
