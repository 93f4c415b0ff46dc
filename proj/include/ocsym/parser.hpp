#pragma once

#include <string_view>

#include "ocsym/expr.hpp"
#include "ocsym/symbols.hpp"

namespace ocsym {

/// Recursive-descent parser for the expression grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' exponent)?
///   exponent:= '-'? INTEGER | '(' '-'? INTEGER ')'
///   primary := INTEGER | IDENT | '(' expr ')'
///
/// Columns in SyntaxError are 1-based; end of input reports length + 1.
/// Identifiers are resolved through `symbols`; unresolved names raise
/// UnknownIdentifier.
Expr parse_expression(std::string_view text, const SymbolTable& symbols = {});

}  // namespace ocsym
