#include "alginv/autsolve/groebner.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "alginv/error.hpp"
#include "alginv/exactpoly/univariate.hpp"

namespace alginv {
namespace {

constexpr std::size_t kMaxVars = 8;
using Exp = std::array<std::uint32_t, kMaxVars>;

// Lex order on exponent vectors indexed from the most significant variable.
using LexPoly = std::map<Exp, Rational, std::greater<Exp>>;

struct Converter {
  const std::vector<Var>& order;

  LexPoly to_lex(const Poly& f) const {
    LexPoly out;
    for (const auto& [mono, coeff] : f.terms()) {
      Exp e{};
      for (const auto& [v, k] : mono.factors()) {
        auto it = std::find(order.begin(), order.end(), v);
        if (it == order.end()) throw DomainError("Groebner input involves a variable outside the order");
        e[static_cast<std::size_t>(it - order.begin())] = k;
      }
      out[e] += coeff;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  Poly to_poly(const LexPoly& f) const {
    Poly out;
    for (const auto& [e, coeff] : f) {
      std::vector<Monomial::Factor> factors;
      for (std::size_t i = 0; i < order.size(); ++i)
        if (e[i] > 0) factors.emplace_back(order[i], e[i]);
      std::sort(factors.begin(), factors.end());
      out.add_term(Monomial(std::move(factors)), coeff);
    }
    return out;
  }
};

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp out{};
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exp minus(const Exp& a, const Exp& b) {
  Exp out{};
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = a[i] - b[i];
  return out;
}

std::uint32_t total(const Exp& a) {
  std::uint32_t t = 0;
  for (auto x : a) t += x;
  return t;
}

// f -= c * x^shift * g
void sub_mul(LexPoly& f, const Rational& c, const Exp& shift, const LexPoly& g) {
  for (const auto& [e, coeff] : g) {
    Exp s{};
    for (std::size_t i = 0; i < kMaxVars; ++i) s[i] = e[i] + shift[i];
    auto [it, inserted] = f.try_emplace(s, 0);
    it->second -= c * coeff;
    if (it->second == 0) f.erase(it);
  }
}

void make_monic(LexPoly& f) {
  if (f.empty()) return;
  const Rational lc = f.begin()->second;
  for (auto& [e, coeff] : f) coeff /= lc;
}

// Full reduction of f by the (monic) basis, skipping index `skip`.
LexPoly reduce(LexPoly f, const std::vector<LexPoly>& basis, std::size_t skip = SIZE_MAX) {
  LexPoly rem;
  while (!f.empty()) {
    auto lead = f.begin();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const auto& [be, bc] = *basis[k].begin();
      if (divides(be, lead->first)) {
        const Rational c = lead->second / bc;
        sub_mul(f, c, minus(lead->first, be), basis[k]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.insert(*lead);
      f.erase(lead);
    }
  }
  return rem;
}

LexPoly s_poly(const LexPoly& f, const LexPoly& g) {
  const auto& [fe, fc] = *f.begin();
  const auto& [ge, gc] = *g.begin();
  const Exp l = lcm(fe, ge);
  LexPoly out;
  sub_mul(out, Rational(-1) / fc, minus(l, fe), f);
  sub_mul(out, Rational(1) / gc, minus(l, ge), g);
  return out;
}

std::vector<LexPoly> interreduce(std::vector<LexPoly> g) {
  g.erase(std::remove_if(g.begin(), g.end(), [](const LexPoly& p) { return p.empty(); }), g.end());
  for (auto& p : g) make_monic(p);
  std::vector<LexPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& ei = g[i].begin()->first;
      const auto& ej = g[j].begin()->first;
      if (divides(ej, ei) && (ej != ei || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    minimal[i] = reduce(minimal[i], minimal, i);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const LexPoly& a, const LexPoly& b) { return a.begin()->first > b.begin()->first; });
  return minimal;
}

}  // namespace

GroebnerResult buchberger_lex(const std::vector<Poly>& equations, const std::vector<Var>& order,
                              std::size_t pair_budget) {
  if (order.size() > kMaxVars) throw DomainError("Groebner order supports at most 8 variables");
  const Converter conv{order};
  std::vector<LexPoly> g;
  for (const Poly& f : equations) {
    LexPoly p = conv.to_lex(f);
    if (!p.empty()) {
      make_monic(p);
      g.push_back(std::move(p));
    }
  }
  GroebnerResult result;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    if (result.pairs_processed >= pair_budget) {
      result.budget_exhausted = true;
      break;
    }
    // Normal selection strategy: smallest total degree of the lcm.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
      return total(lcm(g[x.first].begin()->first, g[x.second].begin()->first)) <
             total(lcm(g[y.first].begin()->first, g[y.second].begin()->first));
    });
    const auto [i, j] = *best;
    pairs.erase(best);
    ++result.pairs_processed;
    const Exp& ei = g[i].begin()->first;
    const Exp& ej = g[j].begin()->first;
    bool coprime = true;
    for (std::size_t k = 0; k < kMaxVars; ++k)
      if (ei[k] > 0 && ej[k] > 0) coprime = false;
    if (coprime) continue;
    LexPoly r = reduce(s_poly(g[i], g[j]), g);
    if (r.empty()) continue;
    make_monic(r);
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  for (const LexPoly& p : interreduce(std::move(g))) result.basis.push_back(conv.to_poly(p));
  return result;
}

Poly lex_normal_form(const Poly& f, const std::vector<Poly>& basis, const std::vector<Var>& order) {
  const Converter conv{order};
  std::vector<LexPoly> g;
  for (const Poly& b : basis) {
    g.push_back(conv.to_lex(b));
    make_monic(g.back());
  }
  return conv.to_poly(reduce(conv.to_lex(f), g));
}

bool is_zero_dimensional(const std::vector<Poly>& basis, const std::vector<Var>& order) {
  const Converter conv{order};
  std::vector<bool> pure(order.size(), false);
  for (const Poly& b : basis) {
    const LexPoly p = conv.to_lex(b);
    if (p.empty()) continue;
    const Exp& e = p.begin()->first;
    std::size_t nonzero = 0, which = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (e[i] > 0) {
        ++nonzero;
        which = i;
      }
    if (nonzero == 0) return true;  // the unit ideal
    if (nonzero == 1) pure[which] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

std::variant<std::vector<Point>, Inconclusive> rational_points(const std::vector<Poly>& basis,
                                                               const std::vector<Var>& order) {
  for (const Poly& b : basis)
    if (b.is_constant() && !b.is_zero()) return std::vector<Point>{};
  if (!is_zero_dimensional(basis, order))
    return Inconclusive{"positive-dimensional: infinite family suspected", basis, std::nullopt};

  const std::size_t n = order.size();
  // level k solves order[n-1-k] using the elements free of more significant variables.
  std::vector<std::vector<const Poly*>> by_level(n);
  for (const Poly& b : basis) {
    std::size_t top = n;
    for (std::size_t i = 0; i < n; ++i)
      if (b.variables().count(order[i])) {
        top = i;
        break;
      }
    if (top < n) by_level[n - 1 - top].push_back(&b);
  }

  std::vector<Point> points;
  std::optional<Inconclusive> failure;
  std::map<Var, Poly> assigned;
  std::function<void(std::size_t)> solve = [&](std::size_t level) {
    if (failure) return;
    if (level == n) {
      Point p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = assigned.at(order[i]).constant_term();
      points.push_back(std::move(p));
      return;
    }
    const Var v = order[n - 1 - level];
    UPoly g;
    for (const Poly* b : by_level[level]) {
      const Poly u = substitute(*b, assigned);
      if (u.is_zero()) continue;
      g = g.empty() ? to_upoly(u, v) : gcd(g, to_upoly(u, v));
    }
    if (g.empty()) {
      failure = Inconclusive{"positive-dimensional: infinite family suspected", basis, std::nullopt};
      return;
    }
    if (degree(g) < 1) return;
    const auto roots = rational_roots(g);
    UPoly residual = g;
    for (const Rational& r : roots) {
      const UPoly linear{Rational(-r), Rational(1)};
      while (true) {
        auto [q, rem] = divmod(residual, linear);
        if (!rem.empty()) break;
        residual = q;
      }
    }
    trim(residual);
    if (degree(residual) >= 1) {
      failure = Inconclusive{"irrational or non-rational algebraic solutions", basis,
                             from_upoly(residual, v)};
      return;
    }
    for (const Rational& r : roots) {
      assigned[v] = Poly(r);
      solve(level + 1);
      assigned.erase(v);
    }
  };
  solve(0);
  if (failure) return *failure;
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace alginv
