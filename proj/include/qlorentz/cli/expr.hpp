#pragma once

#include <string>
#include <string_view>

#include "qlorentz/rewrite/ncpoly.hpp"

namespace qlorentz {

/// Parses the ASCII expression grammar over the shared alphabet
/// (full_alphabet) and specializes the result to the regime.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ['^' exp]           exp := ['-'] int | '(' ['-'] int ['/' '2'] ')'
///   atom   := number | 'i' | 'q' | 'qb' | 't' | generator
///           | '(' expr ')' | 'star(' expr ')' | '[' expr ',' expr ']'
///
/// Generators: alpha..delta (primed: alpha'), x[A,B], x'[A,B], u[A,B],
/// ub[A,B] with A, B in {1,2}, and h[j,k] with j, k in {0..3}. Half powers
/// apply to q, qb and t only; '/' and negative powers need a scalar.
/// Throws SyntaxError, UnknownSymbol, NoncommutativeDivision, DivisionByZero.
NCPoly parse_expr(std::string_view text, const Regime& r);

// Display form of grammar text: Greek generators, q̄ for qb, · for *.
std::string pretty(std::string_view ascii);

}  // namespace qlorentz
