#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "alginv/exactpoly/variable.hpp"

namespace alginv {

/// A power product of variables, stored as (variable, exponent) pairs sorted by the
/// variable order with all exponents positive.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(Var v) const noexcept;

  bool divides(const Monomial& other) const;
  /// Caller guarantees divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Split into the parameter-only and coordinate-only parts.
  std::pair<Monomial, Monomial> split_parameters() const;

  std::string to_string(bool dim2_names = true) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic comparison: negative if a < b, zero if equal, positive if a > b.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Orders monomials from largest to smallest; Poly term maps iterate leading term first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

}  // namespace alginv
