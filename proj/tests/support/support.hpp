#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "alginv/exactpoly/matrix.hpp"
#include "alginv/exactpoly/parse.hpp"
#include "alginv/exactpoly/poly.hpp"
#include "alginv/exactpoly/rational.hpp"

namespace alginv::testing {

using Assign = std::map<std::string, Rational>;

inline const std::vector<std::string>& test_params() {
  static const std::vector<std::string> names{"alpha", "beta", "gamma", "delta", "a", "b", "c", "d"};
  return names;
}

/// Parses an expression in the Table 1 parameters, the group parameters a, b, c, d and
/// the coordinates of up to four slots of a two-dimensional algebra.
inline Poly P(std::string_view text, int slots = 4, int dim = 2) {
  return parse_expr(text, VariableTable::with_coordinates(test_params(), slots, dim));
}

inline Rational Q(long n, long d = 1) { return make_rational(n, d); }

inline QMatrix M2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  QMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline PolyMatrix PM2(std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
  PolyMatrix m(2, 2);
  m(0, 0) = P(a);
  m(0, 1) = P(b);
  m(1, 0) = P(c);
  m(1, 1) = P(d);
  return m;
}

inline std::map<std::string, Poly> as_polys(const Assign& values) {
  std::map<std::string, Poly> out;
  for (const auto& [k, v] : values) out[k] = Poly(v);
  return out;
}

/// Up to `count` distinct admissible tuples drawn from {-2,-1,-1/2,1/2,1,2,3} by a seeded
/// generator. A parameter-free family yields the single empty tuple.
inline std::vector<Assign> draw_samples(const std::vector<std::string>& params, std::size_t count,
                                        const std::function<bool(const Assign&)>& ok, unsigned seed) {
  if (params.empty()) return {Assign{}};
  static const std::vector<Rational> values{Q(-2), Q(-1), Q(-1, 2), Q(1, 2), Q(1), Q(2), Q(3)};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<Assign> out;
  for (int attempt = 0; attempt < 5000 && out.size() < count; ++attempt) {
    Assign a;
    for (const auto& p : params) a[p] = values[pick(rng)];
    if (ok && !ok(a)) continue;
    if (std::find(out.begin(), out.end(), a) != out.end()) continue;
    out.push_back(a);
  }
  return out;
}

inline std::string show(const Assign& a) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : a) {
    out += (first ? "" : ",") + k + "=" + to_string(v);
    first = false;
  }
  return out + ")";
}

}  // namespace alginv::testing

namespace alginv {

inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const QMatrix& m, std::ostream* os) { *os << to_string(m); }

}  // namespace alginv
