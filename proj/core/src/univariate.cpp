#include "alginv/exactpoly/univariate.hpp"

#include <algorithm>

#include "alginv/error.hpp"

namespace alginv {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly to_upoly(const Poly& f, Var v) {
  UPoly out;
  for (const auto& [mono, coeff] : f.terms()) {
    std::uint32_t e = 0;
    for (const auto& [w, k] : mono.factors()) {
      if (!(w == v)) throw DomainError("polynomial is not univariate in " + v.to_string());
      e = k;
    }
    if (out.size() <= e) out.resize(e + 1, Rational(0));
    out[e] += coeff;
  }
  trim(out);
  return out;
}

Poly from_upoly(const UPoly& p, Var v) {
  Poly out;
  for (std::size_t e = 0; e < p.size(); ++e) out.add_term(Monomial(v, static_cast<std::uint32_t>(e)), p[e]);
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& dividend, const UPoly& divisor) {
  UPoly d = divisor;
  trim(d);
  if (d.empty()) throw DomainError("division by zero polynomial");
  UPoly r = dividend;
  trim(r);
  if (r.size() < d.size()) return {UPoly{}, r};
  UPoly q(r.size() - d.size() + 1, Rational(0));
  const Rational& lead = d.back();
  for (int k = degree(r); k >= degree(d); --k) {
    Rational c = r[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    std::size_t shift = static_cast<std::size_t>(k - degree(d));
    q[shift] = c;
    for (std::size_t t = 0; t < d.size(); ++t) r[shift + t] -= c * d[t];
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  if (x.empty() && y.empty()) throw DomainError("gcd of two zero polynomials");
  while (!y.empty()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  Rational lead = x.back();
  for (auto& c : x) c /= lead;
  return x;
}

Rational eval(const UPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  // Coefficients here are small; trial division is adequate.
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& input) {
  UPoly p = input;
  trim(p);
  if (p.empty()) throw DomainError("roots of the zero polynomial");
  std::vector<Rational> roots;
  // Strip the factor t^k.
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (p.size() > 1) {
    // Clear denominators to an integer polynomial.
    Integer l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ip;
    for (const auto& c : p) ip.push_back(Integer(c * l));
    for (const auto& num : positive_divisors(ip.front()))
      for (const auto& den : positive_divisors(ip.back()))
        for (int sign : {1, -1}) {
          Rational t = make_rational(Integer(num * sign), den);
          if (eval(p, t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Var> sole_variable(const Poly& f) {
  auto vars = f.variables();
  if (vars.size() != 1) return std::nullopt;
  return *vars.begin();
}

Poly univariate_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  auto vars = f.variables();
  for (Var v : g.variables()) vars.insert(v);
  if (vars.size() > 1) throw DomainError("univariate_gcd: inputs involve more than one variable");
  if (vars.empty()) return Poly(1L);
  Var v = *vars.begin();
  return from_upoly(gcd(to_upoly(f, v), to_upoly(g, v)), v);
}

}  // namespace alginv
