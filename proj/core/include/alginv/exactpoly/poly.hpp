#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "alginv/exactpoly/monomial.hpp"
#include "alginv/exactpoly/rational.hpp"
#include "alginv/exactpoly/variable.hpp"

namespace alginv {

/// Exact multivariate polynomial over the rationals. The term map never stores a zero
/// coefficient, so structural equality is mathematical equality.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant);             // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(static_cast<long>(constant)) {}  // NOLINT

  static Poly variable(Var v);
  static Poly coordinate(int slot, int index) { return variable(Var::coordinate(slot, index)); }
  static Poly parameter(std::string_view name) { return variable(Var::parameter(name)); }
  static Poly term(const Monomial& monomial, const Rational& coefficient);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& monomial) const;

  /// Leading term in the graded lexicographic order. Precondition: nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  std::set<Var> variables() const;
  bool has_coordinates() const;
  bool has_parameters() const;
  /// Largest slot index among coordinate variables, 0 if none.
  int max_slot() const;
  int max_coordinate_index() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  /// Adds coefficient * monomial in place.
  void add_term(const Monomial& monomial, const Rational& coefficient);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Divides every coefficient by the leading coefficient. Zero stays zero.
  Poly monic() const;

  /// Keep only terms whose monomial satisfies the predicate.
  template <class Pred>
  Poly filter(Pred pred) const {
    Poly out;
    for (const auto& [mono, coeff] : terms_)
      if (pred(mono)) out.terms_.emplace_hint(out.terms_.end(), mono, coeff);
    return out;
  }

  std::string to_string(bool dim2_names = true) const;

 private:
  Terms terms_;
};

Poly pow(const Poly& base, unsigned exponent);

enum class Unassigned { PassThrough, Error };

/// Simultaneous substitution. With Unassigned::Error, any variable of f lacking an
/// assignment raises InputError.
Poly substitute(const Poly& f, const std::map<Var, Poly>& assignments,
                Unassigned policy = Unassigned::PassThrough);

/// Total evaluation to a rational. Throws InputError on a missing variable.
Rational evaluate(const Poly& f, const std::map<Var, Rational>& values);

/// Collects f as a polynomial in the variables selected by `outer`:
/// f = sum_k outer_monomial_k * coefficient_k, with coefficient_k free of those variables.
template <class IsOuter>
std::map<Monomial, Poly, GrlexDescending> collect(const Poly& f, IsOuter is_outer) {
  std::map<Monomial, Poly, GrlexDescending> out;
  for (const auto& [mono, coeff] : f.terms()) {
    std::vector<Monomial::Factor> outer, inner;
    for (const auto& fac : mono.factors()) (is_outer(fac.first) ? outer : inner).push_back(fac);
    out[Monomial(std::move(outer))].add_term(Monomial(std::move(inner)), coeff);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace alginv
