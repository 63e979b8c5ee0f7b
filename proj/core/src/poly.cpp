#include "alginv/exactpoly/poly.hpp"

#include <algorithm>
#include <functional>

#include "alginv/error.hpp"

namespace alginv {

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Poly::Poly(long constant) {
  if (constant != 0) terms_.emplace(Monomial(), Rational(constant));
}

Poly Poly::variable(Var v) { return term(Monomial(v), Rational(1)); }

Poly Poly::term(const Monomial& monomial, const Rational& coefficient) {
  Poly p;
  if (coefficient != 0) p.terms_.emplace(monomial, coefficient);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Poly::constant_term() const { return coefficient(Monomial()); }

Rational Poly::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total_degree());
}

std::set<Var> Poly::variables() const {
  std::set<Var> out;
  for (const auto& [mono, coeff] : terms_)
    for (const auto& f : mono.factors()) out.insert(f.first);
  return out;
}

bool Poly::has_coordinates() const {
  for (const auto& [mono, coeff] : terms_)
    for (const auto& f : mono.factors())
      if (f.first.is_coordinate()) return true;
  return false;
}

bool Poly::has_parameters() const {
  for (const auto& [mono, coeff] : terms_)
    for (const auto& f : mono.factors())
      if (f.first.is_parameter()) return true;
  return false;
}

int Poly::max_slot() const {
  int s = 0;
  for (const auto& [mono, coeff] : terms_)
    for (const auto& f : mono.factors())
      if (f.first.is_coordinate()) s = std::max(s, f.first.slot());
  return s;
}

int Poly::max_coordinate_index() const {
  int s = 0;
  for (const auto& [mono, coeff] : terms_)
    for (const auto& f : mono.factors())
      if (f.first.is_coordinate()) s = std::max(s, f.first.index());
  return s;
}

void Poly::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  Rational c;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      c = ca * cb;
      out.add_term(ma * mb, c);
    }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

std::string Poly::to_string(bool dim2_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (negative)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    if (mono.is_one()) {
      out += alginv::to_string(mag);
    } else {
      if (mag != 1) out += alginv::to_string(mag) + "*";
      out += mono.to_string(dim2_names);
    }
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1L), b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Poly substitute(const Poly& f, const std::map<Var, Poly>& assignments, Unassigned policy) {
  // Cache powers of each image; monomials in one polynomial reuse them heavily.
  std::map<std::pair<Var, std::uint32_t>, Poly> powers;
  std::function<const Poly&(Var, std::uint32_t)> power_of = [&](Var v, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto a = assignments.find(v);
    Poly value;
    if (a == assignments.end()) {
      if (policy == Unassigned::Error) throw InputError("no assignment for variable " + v.to_string());
      value = Poly::term(Monomial(v, e), 1);
    } else if (e == 1) {
      value = a->second;
    } else {
      value = power_of(v, e - 1) * a->second;
    }
    return powers.emplace(key, std::move(value)).first->second;
  };
  Poly out;
  for (const auto& [mono, coeff] : f.terms()) {
    Poly t(coeff);
    for (const auto& [v, e] : mono.factors()) {
      t *= power_of(v, e);
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

Rational evaluate(const Poly& f, const std::map<Var, Rational>& values) {
  Rational out = 0;
  for (const auto& [mono, coeff] : f.terms()) {
    Rational t = coeff;
    for (const auto& [v, e] : mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw InputError("no value for variable " + v.to_string());
      for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
    }
    out += t;
  }
  return out;
}

}  // namespace alginv
