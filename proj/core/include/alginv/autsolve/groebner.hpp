#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alginv/exactpoly/poly.hpp"

namespace alginv {

constexpr std::size_t kDefaultPairBudget = 10000;

struct GroebnerResult {
  std::vector<Poly> basis;  // reduced, monic, sorted by decreasing leading monomial
  bool budget_exhausted = false;
  std::size_t pairs_processed = 0;
};

/// Reduced lexicographic Groebner basis; `order` lists the variables from most to least
/// significant (at most 8). Input polynomials must only involve those variables.
GroebnerResult buchberger_lex(const std::vector<Poly>& equations, const std::vector<Var>& order,
                              std::size_t pair_budget = kDefaultPairBudget);

/// Remainder of f modulo the basis under the same lex order.
Poly lex_normal_form(const Poly& f, const std::vector<Poly>& basis, const std::vector<Var>& order);

/// Every variable is a pure power of some leading monomial (finitely many solutions).
bool is_zero_dimensional(const std::vector<Poly>& basis, const std::vector<Var>& order);

struct Inconclusive {
  std::string reason;
  std::vector<Poly> basis;
  std::optional<Poly> residual;
};

using Point = std::vector<Rational>;  // values in the order of `order`

/// Back-substitution through a zero-dimensional lex basis, least significant variable
/// first. An irreducible factor without rational roots yields Inconclusive.
std::variant<std::vector<Point>, Inconclusive> rational_points(const std::vector<Poly>& basis,
                                                               const std::vector<Var>& order);

}  // namespace alginv
