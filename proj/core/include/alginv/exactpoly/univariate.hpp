#pragma once

#include <optional>
#include <vector>

#include "alginv/exactpoly/poly.hpp"

namespace alginv {

/// Dense univariate polynomial, coefficients from degree 0 upward, no trailing zeros.
using UPoly = std::vector<Rational>;

/// Converts f to dense form in v. Throws DomainError if f involves another variable.
UPoly to_upoly(const Poly& f, Var v);
Poly from_upoly(const UPoly& p, Var v);

int degree(const UPoly& p);
void trim(UPoly& p);
/// Long division; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& dividend, const UPoly& divisor);
/// Monic gcd; throws DomainError if both are zero.
UPoly gcd(const UPoly& a, const UPoly& b);
Rational eval(const UPoly& p, const Rational& t);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& p);

/// Monic gcd of two polynomials in one common variable, not both zero.
/// Constants are allowed; they are treated as polynomials in any variable.
Poly univariate_gcd(const Poly& f, const Poly& g);

/// The single variable of f, if f is a nonconstant univariate polynomial.
std::optional<Var> sole_variable(const Poly& f);

}  // namespace alginv
