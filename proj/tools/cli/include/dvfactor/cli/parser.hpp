#pragma once

#include <cstddef>
#include <memory>
#include <string_view>

#include "dvfactor/poly.hpp"

namespace dvfactor::cli {

/// Syntax tree for the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ['-'] atom ['^' nat]
///   atom   := nat | 'x' | 'y' | '(' expr ')'
struct PolyExpr {
    enum class Kind { literal, var_x, var_y, add, sub, mul, neg, pow };

    Kind kind;
    BigInt value;                 // literal
    unsigned long exponent = 0;   // pow
    std::unique_ptr<PolyExpr> lhs;
    std::unique_ptr<PolyExpr> rhs;
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Throws ParseError with the 1-based line/column of the offending token.
std::unique_ptr<PolyExpr> parse_expression(std::string_view text);

/// Expands in Z[x]; any occurrence of y is rejected.
IntPoly to_int_poly(const PolyExpr& expr);
/// Expands in Z[x][y]; the result must have y-degree >= 1.
BiPoly to_bi_poly(const PolyExpr& expr);

IntPoly parse_int_poly(std::string_view text);
BiPoly parse_bi_poly(std::string_view text);

}  // namespace dvfactor::cli
