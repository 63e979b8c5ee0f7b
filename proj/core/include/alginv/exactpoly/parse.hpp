#pragma once

#include <string_view>

#include "alginv/exactpoly/poly.hpp"
#include "alginv/exactpoly/variable.hpp"

namespace alginv {

/// Parses a coefficient expression:
///   expr := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := base ('^' int)? ; base := rational | ident | '(' expr ')'.
/// Identifiers must be declared parameters or in-range coordinate names
/// (x{r}_{i}; x{r}, y{r} when dim is 2). Whitespace is ignored.
Poly parse_expr(std::string_view text, const VariableTable& declared);

}  // namespace alginv
