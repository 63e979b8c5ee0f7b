// Acceptance gate: one PASS/FAIL line per criterion. Expected values are transcribed
// here independently of the library's own audit tables.
//
//   alginv_acceptance            run all criteria
//   alginv_acceptance 4 7        run the listed criteria

#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alginv/algebra/catalog.hpp"
#include "alginv/autsolve/autsolve.hpp"
#include "alginv/error.hpp"
#include "alginv/exactpoly/grading.hpp"
#include "alginv/exactpoly/span.hpp"
#include "alginv/exactpoly/univariate.hpp"
#include "alginv/group/group.hpp"
#include "alginv/group/group_catalog.hpp"
#include "alginv/invariants/invariants.hpp"
#include "alginv/invariants/trace_algebra.hpp"
#include "alginv/structure/structure.hpp"
#include "alginv/traces/traces.hpp"
#include "alginv/traces/word.hpp"
#include "support.hpp"

namespace {

using namespace alginv;
using namespace alginv::testing;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      problems.push_back(what);
    }
  }
};

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
  return s;
}

// {r}, {s}, {t} -> slot numbers.
std::string inst(const std::string& tmpl, int r, int s, int t) {
  return replace_all(replace_all(replace_all(tmpl, "{r}", std::to_string(r)), "{s}", std::to_string(s)), "{t}",
                     std::to_string(t));
}

Algebra row_algebra(const std::string& tag, const std::map<std::string, std::string>& relations,
                    const Assign& values = {}) {
  std::map<std::string, Poly> v;
  for (const auto& [k, e] : relations) v[k] = P(e);
  for (const auto& [k, q] : values) v[k] = Poly(q);
  if (!values.empty())
    for (auto& [k, p] : v) {
      std::map<Var, Poly> sub;
      for (const auto& [name, q] : values) sub.emplace(Var::parameter(name), Poly(q));
      p = substitute(p, sub);
    }
  return catalog(tag, v);
}

// ------------------------------------------------------------------ shared rows

struct Family {
  std::string tag;
  std::vector<std::string> params;
  std::function<bool(const Assign&)> admissible;
};

const std::vector<Family>& families() {
  auto any = [](const Assign&) { return true; };
  static const std::vector<Family> f{
      {"A1", {"alpha"}, any},
      {"A2", {}, any},
      {"A3", {}, any},
      {"A4", {"alpha"}, any},
      {"B1", {"alpha"}, any},
      {"B2", {"alpha"}, any},
      {"B3", {}, any},
      {"C", {"alpha", "beta"}, any},
      {"D1", {"alpha", "beta"}, any},
      {"D2", {"alpha", "beta"}, [](const Assign& v) { return v.at("alpha") + v.at("beta") != 1; }},
      {"D3", {"alpha", "beta"}, [](const Assign& v) { return v.at("alpha") + v.at("beta") != 1; }},
      {"E1", {"alpha", "beta", "gamma", "delta"}, any},
      {"E2", {"alpha", "beta", "gamma"}, [](const Assign& v) { return v.at("beta") + v.at("gamma") != 1; }},
      {"E3", {"alpha", "beta", "gamma"}, [](const Assign& v) { return v.at("gamma") != 0 && v.at("gamma") != 1; }},
      {"E4", {}, any},
      {"E5", {"alpha"}, any},
      {"N", {}, any},
  };
  return f;
}

// Rows of the generator table (the families with a nontrivial automorphism group).
struct Row {
  std::string id;
  std::string tag;
  std::map<std::string, std::string> relations;  // parameter -> expression in the free ones
  std::vector<std::string> free;
  std::function<bool(const Assign&)> admissible;
};

const std::vector<Row>& rows() {
  auto any = [](const Assign&) { return true; };
  static const std::vector<Row> r{
      {"A1(alpha)", "A1", {}, {"alpha"}, any},
      {"A2", "A2", {}, {}, any},
      {"A3", "A3", {}, {}, any},
      {"A4(0)", "A4", {{"alpha", "0"}}, {}, any},
      {"B2(alpha)", "B2", {}, {"alpha"}, any},
      {"B3", "B3", {}, {}, any},
      {"C(alpha,0)", "C", {{"beta", "0"}}, {"alpha"}, any},
      {"D1(alpha,2alpha-1)", "D1", {{"beta", "2*alpha-1"}}, {"alpha"}, any},
      {"D2(alpha,beta)", "D2", {}, {"alpha", "beta"},
       [](const Assign& v) {
         return v.at("alpha") + v.at("beta") != 1 && !(v.at("alpha") == -1 && v.at("beta") == -1);
       }},
      {"E1(alpha,beta,beta,alpha)", "E1", {{"gamma", "beta"}, {"delta", "alpha"}}, {"alpha", "beta"},
       [](const Assign& v) {
         return v.at("alpha") + v.at("beta") != 1 && !(v.at("alpha") == -1 && v.at("beta") == -1);
       }},
      {"E1(-1,-1,-1,-1)", "E1", {{"alpha", "-1"}, {"beta", "-1"}, {"gamma", "-1"}, {"delta", "-1"}}, {}, any},
      {"E3(alpha,alpha,-1)", "E3", {{"beta", "alpha"}, {"gamma", "-1"}}, {"alpha"}, any},
      {"E5(alpha)", "E5", {}, {"alpha"}, any},
      {"N", "N", {}, {}, any},
  };
  return r;
}

struct RowCase {
  const Row* row;
  Assign values;
  Algebra algebra;
  GroupSpec group;
  std::string label;
};

std::vector<RowCase> row_cases(std::size_t per_row, unsigned seed) {
  std::vector<RowCase> out;
  for (const Row& r : rows()) {
    for (const Assign& s : draw_samples(r.free, per_row, r.admissible, seed++)) {
      Algebra a = row_algebra(r.tag, r.relations, s);
      std::map<std::string, Poly> values;
      for (const auto& [k, e] : r.relations) values[k] = P(e);
      for (auto& [k, p] : values) {
        std::map<Var, Poly> sub;
        for (const auto& [name, q] : s) sub.emplace(Var::parameter(name), Poly(q));
        p = substitute(p, sub);
      }
      for (const auto& [k, q] : s) values[k] = Poly(q);
      auto g = table1_automorphisms(r.tag, values);
      if (!g) throw alginv::Error("no group for " + r.id);
      out.push_back({&r, s, std::move(a), std::move(*g), r.id + (s.empty() ? "" : show(s))});
    }
  }
  return out;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Element column(const QMatrix& g, int j) {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < g.rows(); ++i) c.emplace_back(g(i, static_cast<std::size_t>(j)));
  return Element(c);
}

// g(e_i e_j) == g(e_i) g(e_j), checked directly.
bool direct_automorphism(const Algebra& a, const QMatrix& g) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element lhs = Element::zero(n);
      for (int l = 0; l < n; ++l) lhs += a.constant(i + 1, j + 1, l + 1) * column(g, l);
      if (!(lhs == a.multiply(column(g, i), column(g, j)))) return false;
    }
  return true;
}

// e_i x and x e_i are multiples of x (2x2 determinants vanish).
bool direct_ideal(const Algebra& a, const Element& x) {
  if (x.is_zero()) return false;
  for (int i = 1; i <= 2; ++i)
    for (const Element& y : {a.multiply(Element::basis(2, i), x), a.multiply(x, Element::basis(2, i))})
      if (!(x.coords[0] * y.coords[1] - x.coords[1] * y.coords[0]).is_zero()) return false;
  return true;
}

// Is `target` a sum of one or more entries of `parts` (with repetition)?
bool decomposes(const Multidegree& target, const std::vector<Multidegree>& parts) {
  std::set<Multidegree> reach{Multidegree(target.size(), 0)};
  std::vector<Multidegree> frontier{Multidegree(target.size(), 0)};
  while (!frontier.empty()) {
    std::vector<Multidegree> next;
    for (const auto& d : frontier)
      for (const auto& p : parts) {
        Multidegree s = d + p;
        if (!componentwise_leq(s, target)) continue;
        if (s == target) return true;
        if (reach.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return false;
}

// ------------------------------------------------------------------ criteria

Verdict criterion1() {
  struct F {
    std::string word, formula;
  };
  struct TRow {
    std::string id, tag;
    std::map<std::string, std::string> rel;
    std::vector<F> formulas;
  };
  const std::string H = "2*x{r}*x{s}-x{r}*y{s}-y{r}*x{s}+2*y{r}*y{s}";
  const std::string T =
      "2*x{r}*x{s}*x{t}-x{r}*x{s}*y{t}-x{r}*y{s}*x{t}-x{r}*y{s}*y{t}-y{r}*x{s}*x{t}-y{r}*x{s}*y{t}"
      "-y{r}*y{s}*x{t}+2*y{r}*y{s}*y{t}";
  const std::string L = "(x{r}*x0)", R = "(x0*x{r})", RS0 = "(x{r}*(x{s}*x0))", S0R = "((x{s}*x0)*x{r})",
                    R0S = "(x{r}*(x0*x{s}))", OSR = "((x0*x{s})*x{r})", RSO = "((x{r}*x{s})*x0)",
                    ORS = "(x0*(x{r}*x{s}))";
  const std::vector<TRow> table{
      {"A1", "A1", {},
       {{L, "(1+alpha)*x{r}"}, {R, "(2-alpha)*x{r}"}, {RS0, "(1+alpha^2)*x{r}*x{s}"},
        {S0R, "(1+alpha-alpha^2)*x{r}*x{s}"}, {R0S, "(1+alpha-alpha^2)*x{r}*x{s}"},
        {OSR, "(2-2*alpha+alpha^2)*x{r}*x{s}"}, {RSO, "(1+alpha)*x{r}*x{s}"}, {ORS, "(2-alpha)*x{r}*x{s}"}}},
      {"A2", "A2", {},
       {{L, "x{r}"}, {R, "-x{r}"}, {RS0, "x{r}*x{s}"}, {S0R, "-x{r}*x{s}"}, {R0S, "-x{r}*x{s}"},
        {OSR, "x{r}*x{s}"}, {RSO, "0"}, {ORS, "0"}}},
      {"A3", "A3", {}, {{L, "0"}, {R, "0"}}},
      {"A4(0)", "A4", {{"alpha", "0"}}, {{L, "-y{r}"}, {R, "y{r}"}, {RS0, "2*x{r}*x{s}+y{r}*y{s}"}}},
      {"B2", "B2", {}, {{L, "alpha*y{r}"}, {R, "(1-alpha)*y{r}"}}},
      {"B3", "B3", {}, {{L, "x{r}"}, {R, "-x{r}"}}},
      {"C(alpha,0)", "C", {{"beta", "0"}},
       {{L, "(1+alpha)*y{r}"}, {R, "(2-alpha)*y{r}"}, {R0S, "x{r}*x{s}+(1+(1-alpha)*alpha)*y{r}*y{s}"}}},
      {"D1(alpha,2alpha-1)", "D1", {{"beta", "2*alpha-1"}},
       {{L, "alpha*(2*x{r}+y{r})"}, {R, "(1-alpha)*(2*x{r}+y{r})"},
        {OSR, "1/2*(1-2*alpha+2*alpha^2)*(2*x{r}+y{r})*(2*x{s}+y{s})+(1/2-alpha)*y{r}*y{s}"},
        {RSO, "1/2*alpha*(2*x{r}+y{r})*(2*x{s}+y{s})-1/2*alpha*y{r}*y{s}"}}},
      {"D2", "D2", {}, {{L, "(1+alpha)*x{r}"}, {R, "(1+beta)*x{r}"}}},
      {"D3", "D3", {}, {{L, "(1+alpha)*x{r}-y{r}"}, {R, "(1+beta)*x{r}+y{r}"}}},
      {"E1(alpha,beta,beta,alpha)", "E1", {{"gamma", "beta"}, {"delta", "alpha"}},
       {{L, "(1+beta)*(x{r}+y{r})"}, {R, "(1+alpha)*(x{r}+y{r})"},
        {RS0, "(1+beta^2)*(x{r}+y{r})*(x{s}+y{s})+(alpha^2-beta^2+2*beta-1)*(x{r}*y{s}+y{r}*x{s})"},
        {OSR, "(1+alpha^2)*(x{r}+y{r})*(x{s}+y{s})+(beta^2-alpha^2+2*alpha-1)*(x{r}*y{s}+y{r}*x{s})"}}},
      {"E1(-1,-1,-1,-1)", "E1", {{"alpha", "-1"}, {"beta", "-1"}, {"gamma", "-1"}, {"delta", "-1"}},
       {{L, "0"}, {R, "0"}, {RS0, H}, {"(x{r}*((x{s}*x{t})*x0))", T}}},
      {"E3(alpha,alpha,-1)", "E3", {{"beta", "alpha"}, {"gamma", "-1"}},
       {{L, "(1-alpha)*(x{r}+y{r})"}, {R, "alpha*(x{r}+y{r})"},
        {RS0, "(1+alpha^2)*(x{r}+y{r})*(x{s}+y{s})-4*alpha*(x{r}*y{s}+y{r}*x{s})"},
        {OSR, "(alpha^2-2*alpha+2)*(x{r}+y{r})*(x{s}+y{s})+4*(alpha-1)*(x{r}*y{s}+y{r}*x{s})"}}},
      {"E5", "E5", {}, {{L, "(1+alpha)*(x{r}+y{r})"}, {R, "(2-alpha)*(x{r}+y{r})"}}},
  };
  const std::vector<std::array<int, 3>> slots{{1, 2, 3}, {2, 1, 3}, {1, 1, 1}, {3, 2, 2}};
  Verdict v;
  std::size_t checked = 0, nrows = 0;
  for (const auto& row : table) {
    const Algebra a = row_algebra(row.tag, row.rel);
    ++nrows;
    for (const auto& f : row.formulas)
      for (const auto& [r, s, t] : slots) {
        const Word w = parse_word(inst(f.word, r, s, t));
        const Poly got = trace_of_word(a, w, 3);
        const Poly want = P(inst(f.formula, r, s, t));
        ++checked;
        v.require(got == want, row.id + " " + w.to_string() + ": got " + got.to_string() + ", want " +
                                   want.to_string());
      }
  }
  // N: every operator trace vanishes.
  const Algebra n = catalog("N");
  ++nrows;
  for (const auto& delta : multidegrees_up_to(3, 3)) {
    Multidegree full{1};
    full.insert(full.end(), delta.begin(), delta.end());
    for (const Word& w : enumerate_words(3, full)) {
      ++checked;
      v.require(trace_of_word(n, w, 3).is_zero(), "N " + w.to_string() + " nonzero");
    }
  }
  v.detail = std::to_string(nrows) + " rows, " + std::to_string(checked) + " formula instances";
  return v;
}

Verdict criterion2() {
  Verdict v;
  std::size_t algebras = 0, words = 0;
  unsigned seed = 200;
  std::vector<Word> all;
  for (const auto& delta : multidegrees_up_to(3, 3)) {
    Multidegree full{1};
    full.insert(full.end(), delta.begin(), delta.end());
    for (const Word& w : enumerate_words(3, full)) {
      auto shape = WordShape::from_word(w);
      if (shape && shape->max_multiplier_degree() <= 2) all.push_back(w);
    }
  }
  for (const Family& f : families()) {
    for (const Assign& s : draw_samples(f.params, 5, f.admissible, seed++)) {
      const Algebra a = catalog(f.tag, s);
      ++algebras;
      for (const Word& w : all) {
        ++words;
        const Poly closed = trace_closed_form(a, *WordShape::from_word(w));
        v.require(trace_of_word(a, w, 3) == closed, f.tag + show(s) + " " + w.to_string());
      }
    }
  }
  v.detail = std::to_string(algebras) + " algebras x " + std::to_string(all.size()) + " words (" +
             std::to_string(words) + " comparisons)";
  return v;
}

Verdict criterion3() {
  Verdict v;
  for (int n : {2, 3}) {
    const Algebra a = matrix_algebra(n);
    for (int r : {1, 2}) {
      Poly want;
      for (int i = 1; i <= n; ++i) want += Poly::coordinate(r, (i - 1) * n + i);
      want *= Rational(n);
      const Word w = parse_word("(x" + std::to_string(r) + "*x0)");
      v.require(trace_of_word(a, w, 2) == want, "Mat(" + std::to_string(n) + ") tr_L(X_" + std::to_string(r) + ")");
    }
  }
  const Algebra oct = split_octonions();
  v.require(oct.dim() == 8, "octonions are 8-dimensional");
  auto t = [](const Element& u) { return u.coords[0] + u.coords[7]; };
  for (int r : {1, 2}) {
    const Word w = parse_word("(x" + std::to_string(r) + "*x0)");
    v.require(trace_of_word(oct, w, 2) == Rational(4) * t(Element::generic(8, r)),
              "Oct tr_L(X_" + std::to_string(r) + ")");
  }
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 1}}) {
    const std::string ps = std::to_string(p), qs = std::to_string(q);
    const Word w = parse_word("((x" + ps + "*x" + qs + ")*x0)");
    const Element prod = oct.multiply(Element::generic(8, p), Element::generic(8, q));
    v.require(trace_of_word(oct, w, 2) == Rational(4) * t(prod), "Oct tr_L(X_" + ps + "X_" + qs + ")");
  }
  v.detail = "Mat(2), Mat(3), Oct identities";
  return v;
}

Verdict criterion4() {
  Verdict v;
  const std::vector<QMatrix> displayed{M2(-1, 0, -1, 1), M2(-1, 1, -1, 0), M2(0, -1, 1, -1),
                                       M2(1, -1, 0, -1), M2(0, 1, 1, 0),   M2(1, 0, 0, 1)};
  const Algebra a = catalog("E1", Assign{{"alpha", -1}, {"beta", -1}, {"gamma", -1}, {"delta", -1}});
  const SolveOutcome o = automorphism_group_dim2(a);
  v.require(o.finite(), "solver inconclusive: " + o.reason);
  v.require(o.matrices.size() == 6, "expected 6 matrices, got " + std::to_string(o.matrices.size()));
  for (const auto& g : displayed)
    v.require(std::find(o.matrices.begin(), o.matrices.end(), g) != o.matrices.end(),
              "missing displayed matrix " + to_string(g));
  for (const auto& g : o.matrices) v.require(direct_automorphism(a, g), "not an automorphism: " + to_string(g));
  v.require(o.closure.closed && o.closure.order == 6 && !o.closure.abelian, "closure report");
  bool closed = true, commutative = true;
  for (const auto& g : displayed)
    for (const auto& h : displayed) {
      closed = closed && std::find(displayed.begin(), displayed.end(), g * h) != displayed.end();
      commutative = commutative && g * h == h * g;
    }
  v.require(closed && !commutative, "independent closure / non-commutativity check");
  v.detail = std::to_string(o.matrices.size()) + " automorphisms, closed, non-abelian";
  return v;
}

Verdict criterion5() {
  Verdict v;
  struct Listed {
    std::string id, tag;
    std::map<std::string, std::string> rel;
    std::vector<PolyMatrix> elements;
  };
  std::vector<PolyMatrix> s3;
  for (const auto& m : {M2(-1, 0, -1, 1), M2(-1, 1, -1, 0), M2(0, -1, 1, -1), M2(1, -1, 0, -1), M2(0, 1, 1, 0),
                        M2(1, 0, 0, 1)})
    s3.push_back(to_poly(m));
  const PolyMatrix J = PM2("0", "1", "1", "0"), D = PM2("-1", "0", "0", "1");
  const std::vector<Listed> listed{
      {"A1(alpha)", "A1", {}, {PM2("1", "0", "a", "1")}},
      {"A2", "A2", {}, {PM2("1", "0", "a", "1")}},
      {"A3", "A3", {}, {PM2("b", "0", "a", "b^2")}},
      {"A4(0)", "A4", {{"alpha", "0"}}, {D}},
      {"B2(alpha)", "B2", {}, {PM2("b", "0", "0", "1")}},
      {"B3", "B3", {}, {PM2("1", "0", "a", "b")}},
      {"C(alpha,0)", "C", {{"beta", "0"}}, {D}},
      {"D1(alpha,2alpha-1)", "D1", {{"beta", "2*alpha-1"}}, {PM2("1", "1", "0", "-1")}},
      {"D2(alpha,beta)", "D2", {}, {PM2("1", "0", "0", "b")}},
      {"E1(alpha,beta,beta,alpha)", "E1", {{"gamma", "beta"}, {"delta", "alpha"}}, {J}},
      {"E1(-1,-1,-1,-1)", "E1", {{"alpha", "-1"}, {"beta", "-1"}, {"gamma", "-1"}, {"delta", "-1"}}, s3},
      {"E3(alpha,alpha,-1)", "E3", {{"beta", "alpha"}, {"gamma", "-1"}}, {J}},
      {"E5(alpha)", "E5", {}, {PM2("a", "c", "1-a", "1-c")}},
      {"N", "N", {}, {PM2("a", "b", "c", "d")}},
  };
  std::size_t identities = 0;
  for (const auto& l : listed) {
    const Algebra a = row_algebra(l.tag, l.rel);
    for (const auto& g : l.elements) {
      ++identities;
      v.require(is_automorphism(a, g), l.id + ": listed element fails " + to_string(g));
    }
    std::map<std::string, Poly> values;
    for (const auto& [k, e] : l.rel) values[k] = P(e);
    auto spec = table1_automorphisms(l.tag, values);
    v.require(spec && !spec->is_trivial() && is_automorphism(a, *spec), l.id + ": catalog group");
  }
  struct Trivial {
    std::string tag;
    std::vector<std::string> params;
    std::function<bool(const Assign&)> ok;
  };
  const std::vector<Trivial> trivial{
      {"A4", {"alpha"}, [](const Assign& s) { return s.at("alpha") > 0; }},
      {"B1", {"alpha"}, nullptr},
      {"C", {"alpha", "beta"}, [](const Assign& s) { return s.at("beta") > 0; }},
      {"D1", {"alpha", "beta"}, [](const Assign& s) { return s.at("beta") != 2 * s.at("alpha") - 1; }},
      {"D3", {"alpha", "beta"}, [](const Assign& s) { return s.at("alpha") + s.at("beta") != 1; }},
      {"E1",
       {"alpha", "beta", "gamma", "delta"},
       [](const Assign& s) { return !(s.at("alpha") == s.at("delta") && s.at("beta") == s.at("gamma")); }},
      {"E2", {"alpha", "beta", "gamma"}, [](const Assign& s) { return s.at("beta") + s.at("gamma") != 1; }},
      {"E3",
       {"alpha", "beta", "gamma"},
       [](const Assign& s) {
         const Rational& g = s.at("gamma");
         return g != 0 && g != 1 && !(g == -1 && s.at("alpha") == s.at("beta"));
       }},
      {"E4", {}, nullptr},
  };
  std::size_t solved = 0;
  unsigned seed = 500;
  for (const auto& t : trivial)
    for (const Assign& s : draw_samples(t.params, 3, t.ok, seed++)) {
      ++solved;
      const SolveOutcome o = automorphism_group_dim2(catalog(t.tag, s));
      v.require(o.finite() && o.matrices.size() == 1 && o.matrices.front() == QMatrix::identity(2),
                t.tag + show(s) + ": expected {identity}" + (o.finite() ? "" : ", " + o.reason));
    }
  v.detail = std::to_string(identities) + " listed identities, " + std::to_string(trivial.size()) +
             " trivial-group families (" + std::to_string(solved) + " solves)";
  return v;
}

bool expected_simple(const std::string& tag, const Assign& s) {
  auto g = [&](const char* k) { return s.at(k); };
  if (tag == "A4" || tag == "B1" || tag == "C" || tag == "E3" || tag == "E4") return true;
  if (tag == "D1") return g("beta") != 0;
  if (tag == "D3") return !(g("alpha") == 0 && g("beta") == 0);
  if (tag == "E1")
    return !(g("alpha") == 0 && g("gamma") == 0) && !(g("beta") == 0 && g("delta") == 0) &&
           !(g("beta") == 1 - g("alpha") && g("delta") == 1 - g("gamma"));
  if (tag == "E2") return !(g("beta") == 0 && g("gamma") == 0);
  return false;  // A1, A2, A3, B2, B3, D2, E5, N
}

Verdict criterion6() {
  Verdict v;
  std::vector<std::pair<std::string, Assign>> cases;
  unsigned seed = 600;
  for (const Family& f : families())
    for (const Assign& s : draw_samples(f.params, 5, f.admissible, seed++)) cases.emplace_back(f.tag, s);
  cases.push_back({"D1", {{"alpha", Q(1, 2)}, {"beta", 0}}});
  cases.push_back({"D1", {{"alpha", 3}, {"beta", 0}}});
  cases.push_back({"D3", {{"alpha", 0}, {"beta", 0}}});
  cases.push_back({"E1", {{"alpha", 2}, {"beta", -1}, {"gamma", -1}, {"delta", 2}}});
  cases.push_back({"E1", {{"alpha", Q(1, 2)}, {"beta", Q(1, 2)}, {"gamma", 3}, {"delta", -2}}});
  cases.push_back({"E2", {{"alpha", 2}, {"beta", 0}, {"gamma", 0}}});
  std::size_t simple = 0;
  for (const auto& [tag, s] : cases) {
    const Algebra a = catalog(tag, s);
    const bool got = is_simple_dim2(a);
    simple += got;
    v.require(got == expected_simple(tag, s), tag + show(s) + (got ? " reported simple" : " reported not simple"));
    const IdealSearch search = one_dim_ideal_witness(a);
    if (search.witness)
      v.require(direct_ideal(a, *search.witness), tag + show(s) + ": witness does not span an ideal");
    if (got) v.require(!ideal_grid_search(a, 10), tag + show(s) + ": grid found an ideal in a simple algebra");
  }
  v.detail = std::to_string(cases.size()) + " algebras (" + std::to_string(simple) + " simple)";
  return v;
}

// Expected census: multidegree -> number of generators, for m slots.
std::map<Multidegree, std::size_t> expected_census(const std::string& id, int m) {
  std::map<Multidegree, std::size_t> c;
  auto e = [m](std::initializer_list<int> slots) {
    Multidegree d(static_cast<std::size_t>(m), 0);
    for (int s : slots) d[static_cast<std::size_t>(s - 1)] += 1;
    return d;
  };
  auto each_r = [&](std::size_t k) {
    for (int r = 1; r <= m; ++r) c[e({r})] += k;
  };
  auto pairs = [&](bool diagonal) {
    for (int r = 1; r <= m; ++r)
      for (int s = diagonal ? r : r + 1; s <= m; ++s) c[e({r, s})] += 1;
  };
  if (id == "A1(alpha)" || id == "A2") {
    each_r(1);
    pairs(false);
  } else if (id == "A4(0)" || id == "C(alpha,0)") {
    pairs(true);
    each_r(1);
  } else if (id == "B2(alpha)" || id == "B3" || id == "D2(alpha,beta)" || id == "E5(alpha)") {
    each_r(1);
  } else if (id == "D1(alpha,2alpha-1)") {
    each_r(1);
    pairs(true);
  } else if (id == "E1(alpha,beta,beta,alpha)" || id == "E3(alpha,alpha,-1)") {
    each_r(1);
    for (int r = 1; r <= m; ++r) c[e({r, r})] += 1;
    pairs(false);
  } else if (id == "E1(-1,-1,-1,-1)") {
    pairs(true);
    for (int r = 1; r <= m; ++r)
      for (int s = r; s <= m; ++s)
        for (int t = s; t <= m; ++t) c[e({r, s, t})] += 1;
  }
  return c;  // A3, N: only the constant 1
}

Verdict criterion7() {
  Verdict v;
  std::size_t cases = 0, census_ok = 0, irreducible_ok = 0;
  std::vector<std::string> reducible;
  for (const RowCase& rc : row_cases(2, 700)) {
    for (int m = 1; m <= 3; ++m) {
      ++cases;
      const int D = std::max(4, rc.group.is_finite() ? static_cast<int>(rc.group.finite_elements().size()) : 0);
      const GeneratorReport rep = minimal_generators(rc.group, m, D);
      std::map<Multidegree, std::size_t> got;
      std::vector<Multidegree> degrees;
      for (const auto& [delta, gens] : rep.generators) {
        got[delta] = gens.size();
        for (std::size_t k = 0; k < gens.size(); ++k) degrees.push_back(delta);
        for (const Poly& g : gens)
          for (const QMatrix& h : sample_elements(rc.group, 3, 7))
            v.require(act(h, g) == g, rc.label + ": generator not invariant");
      }
      const bool census = got == expected_census(rc.row->id, m);
      census_ok += census;
      v.require(census, rc.label + " m=" + std::to_string(m) + ": census mismatch");
      // Literal test, computed here and compared with the library's flag.
      bool irreducible = true;
      for (std::size_t i = 0; i < degrees.size(); ++i) {
        std::vector<Multidegree> others;
        for (std::size_t j = 0; j < degrees.size(); ++j)
          if (j != i) others.push_back(degrees[j]);
        if (decomposes(degrees[i], others)) irreducible = false;
      }
      v.require(irreducible == rep.multidegree_irreducible, rc.label + ": irreducibility flags disagree");
      irreducible_ok += irreducible;
      if (!irreducible) reducible.push_back(rc.label + " m=" + std::to_string(m));
      v.require(irreducible, rc.label + " m=" + std::to_string(m) + ": returned set not multidegree-irreducible");
    }
  }
  v.detail = "census " + std::to_string(census_ok) + "/" + std::to_string(cases) + "; multidegree-irreducible " +
             std::to_string(irreducible_ok) + "/" + std::to_string(cases);
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::size_t checks = 0;
  const Poly commutator = P("x1*y2-y1*x2");
  for (const RowCase& rc : row_cases(2, 800)) {
    for (int m = 1; m <= 2; ++m) {
      ++checks;
      const ApiReport rep = api_check(rc.algebra, rc.group, m, 4);
      v.require(rep.included_everywhere(), rc.label + ": trace span not inside the invariants");
      const bool exception = (rc.row->id == "A1(alpha)" || rc.row->id == "A2") && m == 2;
      if (!exception) {
        v.require(rep.equal_everywhere(), rc.label + " m=" + std::to_string(m) + ": unexpected strict inclusion");
        continue;
      }
      const ApiEntry* strict = rep.first_strict();
      v.require(strict && strict->multidegree == Multidegree{1, 1}, rc.label + ": first strict degree not (1,1)");
      if (strict) v.require(strict->invariant_dim == strict->trace_dim + 1, rc.label + ": codimension at (1,1)");
      const GradedSpan fixed = fixed_subspace(rc.group, 2, {1, 1});
      const GradedSpan traces = trace_span(rc.algebra, 2, {1, 1}, 4);
      v.require(fixed.span.contains(commutator) && !traces.span.contains(commutator),
                rc.label + ": x1*y2-y1*x2 is not a witness");
    }
  }
  {
    ++checks;
    const Algebra a = catalog("D2", Assign{{"alpha", -1}, {"beta", -1}});
    const GroupSpec g = *table1_automorphisms("table1:D2", {{"alpha", Poly(-1)}, {"beta", Poly(-1)}});
    const ApiReport rep = api_check(a, g, 1, 4);
    const ApiEntry* strict = rep.first_strict();
    v.require(strict && strict->multidegree == Multidegree{1}, "D2(-1,-1): not strict at (1)");
    v.require(fixed_subspace(g, 1, {1}).span.contains(P("x1")) && !trace_span(a, 1, {1}, 4).span.contains(P("x1")),
              "D2(-1,-1): x1 is not a witness");
  }
  for (const Assign& s : draw_samples({"alpha"}, 3, nullptr, 880)) {
    ++checks;
    const Rational alpha = s.at("alpha");
    const Algebra a = catalog("D3", Assign{{"alpha", alpha}, {"beta", -alpha - 2}});
    const ApiReport rep = api_check(a, GroupSpec::trivial(2), 1, 4);
    const ApiEntry* strict = rep.first_strict();
    v.require(strict && strict->multidegree == Multidegree{1}, "D3" + show(s) + ": not strict at (1)");
    const PolySpan traces = trace_span(a, 1, {1}, 4).span;
    v.require(!traces.contains(P("x1")) && !traces.contains(P("y1")), "D3" + show(s) + ": x1 or y1 is a trace");
  }
  v.detail = std::to_string(checks) + " truncated comparisons (m<=2, D<=4)";
  return v;
}

Verdict criterion9() {
  Verdict v;
  const std::set<std::string> symmetric{"A4(0)", "C(alpha,0)", "D1(alpha,2alpha-1)", "E1(alpha,beta,beta,alpha)",
                                        "E1(-1,-1,-1,-1)", "E3(alpha,alpha,-1)"};
  const std::set<std::string> skew{"A1(alpha)", "A2"};
  std::size_t cases = 0;
  for (const RowCase& rc : row_cases(2, 900)) {
    ++cases;
    const FormsReport rep = classify_forms(rc.algebra, rc.group);
    const std::string& id = rc.row->id;
    v.require(rep.symmetric.exists == symmetric.count(id) > 0, rc.label + ": symmetric verdict");
    v.require(rep.skew.exists == skew.count(id) > 0, rc.label + ": skew verdict");
    const auto elements = sample_elements(rc.group, 3, 9);
    for (const FormVerdict* f : {&rep.symmetric, &rep.skew, &rep.symmetric_associative}) {
      if (!f->exists) continue;
      v.require(f->witness.has_value(), rc.label + ": no witness");
      if (!f->witness) continue;
      const QMatrix& w = *f->witness;
      v.require(determinant(w) != 0, rc.label + ": witness degenerate");
      for (const QMatrix& g : elements) v.require(transpose(g) * w * g == w, rc.label + ": witness not invariant");
    }
    if (rep.symmetric.witness) v.require(transpose(*rep.symmetric.witness) == *rep.symmetric.witness, rc.label);
    if (rep.skew.witness) {
      QMatrix neg = *rep.skew.witness;
      neg.scale(Rational(-1));
      v.require(transpose(*rep.skew.witness) == neg, rc.label + ": skew witness not skew");
    }
    if (id == "D1(alpha,2alpha-1)") {
      PolySpan pattern({form_to_poly(M2(4, 2, 2, 1)), form_to_poly(M2(0, 0, 0, 1))});
      std::vector<Poly> got;
      for (const QMatrix& b : rep.symmetric.basis) got.push_back(form_to_poly(b));
      v.require(PolySpan(got) == pattern, rc.label + ": symmetric forms are not [[4k,2k],[2k,k+l]]");
    }
    if (id == "A4(0)")
      v.require(rep.symmetric.exists && !rep.symmetric_associative.exists, "A4(0): symmetric associative form");
  }
  v.detail = std::to_string(cases) + " algebras";
  return v;
}

Verdict criterion10() {
  Verdict v;
  const GroupSpec s3 = GroupSpec::finite(2, {M2(-1, 0, -1, 1), M2(-1, 1, -1, 0), M2(0, -1, 1, -1), M2(1, -1, 0, -1),
                                             M2(0, 1, 1, 0), M2(1, 0, 0, 1)});
  const Poly f1 = P("x1+y1"), f2 = P("x2+y2"), f3 = P("x3+y3"), f12 = P("x1*y2+y1*x2");
  const Poly H12 = P("2*x1*x2-x1*y2-y1*x2+2*y1*y2");
  const Poly T123 = P("2*x1*x2*x3-x1*x2*y3-x1*y2*x3-x1*y2*y3-y1*x2*x3-y1*x2*y3-y1*y2*x3+2*y1*y2*y3");
  v.require(reynolds(s3, f1 * f2) == Rational(6) * H12, "f1 f2");
  v.require(reynolds(s3, f1 * f2 * f3) == Rational(-6) * T123, "f1 f2 f3");
  v.require(reynolds(s3, f12) == Rational(2) * H12, "f12");
  v.require(reynolds(s3, f3 * f12) == Rational(-4) * T123, "f3 f12");
  v.detail = "4 transfer identities";
  return v;
}

Poly random_poly(std::mt19937& rng, int slots) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 1), count(0, 4);
  Poly f;
  for (int k = count(rng); k >= 0; --k) {
    Poly term(coeff(rng));
    for (int s = 1; s <= slots; ++s)
      for (int i = 1; i <= 2; ++i) term *= pow(Poly::coordinate(s, i), static_cast<unsigned>(expo(rng)));
    f += term;
  }
  return f;
}

QMatrix random_invertible(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 3);
  for (;;) {
    QMatrix g = M2(e(rng), e(rng), e(rng), e(rng));
    if (determinant(g) != 0) return g;
  }
}

Verdict criterion11() {
  Verdict v;
  std::mt19937 rng(1100);
  // Ring axioms and evaluation as a homomorphism.
  for (int k = 0; k < 60; ++k) {
    const Poly f = random_poly(rng, 2), g = random_poly(rng, 2), h = random_poly(rng, 2);
    v.require((f + g) + h == f + (g + h) && f + g == g + f, "addition");
    v.require((f * g) * h == f * (g * h) && f * g == g * f, "multiplication");
    v.require(f * (g + h) == f * g + f * h && (f - f).is_zero() && f * Poly(1) == f, "distributivity");
    std::map<Var, Rational> pt;
    std::uniform_int_distribution<int> e(-4, 4);
    for (int s = 1; s <= 2; ++s)
      for (int i = 1; i <= 2; ++i) pt[Var::coordinate(s, i)] = make_rational(e(rng), 1 + (e(rng) + 4) % 3);
    v.require(evaluate(f * g + h, pt) == evaluate(f, pt) * evaluate(g, pt) + evaluate(h, pt), "evaluation");
  }
  // Right-action law.
  for (int k = 0; k < 40; ++k) {
    const QMatrix g = random_invertible(rng), h = random_invertible(rng);
    const Poly f = random_poly(rng, 2);
    v.require(act(h, act(g, f)) == act(g * h, f), "right action law");
    v.require(act(QMatrix::identity(2), f) == f, "identity acts trivially");
  }
  // Fixed subspaces are invariant; trace spans lie inside them; family parts as identities.
  for (const RowCase& rc : row_cases(1, 1110)) {
    const auto elements = sample_elements(rc.group, 4, 11);
    for (const auto& delta : multidegrees_up_to(2, 3)) {
      const GradedSpan fixed = fixed_subspace(rc.group, 2, delta);
      for (const Poly& b : fixed.basis()) {
        for (const QMatrix& g : elements) v.require(act(g, b) == b, rc.label + ": fixed basis not invariant");
        for (const auto& part : rc.group.parts())
          if (const auto* fam = std::get_if<GroupFamily>(&part))
            v.require(act(fam->matrix, b) == b, rc.label + ": not a family invariant");
      }
      const GradedSpan traces = trace_span(rc.algebra, 2, delta, 3);
      for (const Poly& t : traces.basis()) {
        v.require(fixed.span.contains(t), rc.label + ": trace outside invariants at " + to_string(delta));
        for (const QMatrix& g : elements) v.require(act(g, t) == t, rc.label + ": trace not invariant");
      }
    }
  }
  // Noether bound: no new generators above |G| for every finite catalog group.
  std::size_t finite_groups = 0;
  for (const auto& tag : builtin_group_tags()) {
    const GroupSpec g = builtin_group(tag);
    if (!g.is_finite() || g.is_trivial()) continue;
    ++finite_groups;
    const int order = static_cast<int>(g.finite_elements().size());
    const GeneratorReport rep = minimal_generators(g, 2, order + 2);
    for (const auto& [delta, gens] : rep.generators)
      v.require(total(delta) <= order, tag + ": generator of degree " + std::to_string(total(delta)));
  }
  v.require(finite_groups >= 4, "expected at least four finite catalog groups");
  // Weyl polarization at m = 3.
  {
    const GroupSpec a1 = *table1_automorphisms("table1:A1", {});
    v.require(weyl_check(a1, 3, 4).holds, "Weyl A1");
    const GroupSpec s3 = GroupSpec::finite(2, e1_s3_matrices());
    v.require(weyl_check(s3, 3, 6).holds, "Weyl E1(-1,-1,-1,-1)");
  }
  // Simplicity against the grid oracle, with witness re-verification.
  std::size_t grid_cases = 0;
  std::uniform_int_distribution<int> c(-2, 2), zero(0, 2);
  for (int k = 0; k < 250; ++k) {
    Algebra::Table t(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2)));
    for (auto& row : t)
      for (auto& cell : row)
        for (auto& x : cell) x = zero(rng) == 0 ? Poly(0) : Poly(c(rng));
    const Algebra a(2, {}, t, "random");
    ++grid_cases;
    const IdealSearch s = one_dim_ideal_witness(a);
    const auto grid = ideal_grid_search(a, 6);
    if (grid) {
      v.require(direct_ideal(a, *grid), "grid oracle returned a non-ideal");
      v.require(s.has_ideal(), "grid found an ideal the search missed");
    }
    if (s.witness) {
      v.require(direct_ideal(a, *s.witness) && verify_ideal_witness(a, *s.witness), "witness re-verification");
      const Element& x = *s.witness;
      int height = 1;
      if (!x.coords[0].is_zero()) {
        const Rational u = x.coords[1].constant_term() / x.coords[0].constant_term();
        const Integer num = abs(u.get_num());
        height = std::max({1, static_cast<int>(num.get_si()), static_cast<int>(u.get_den().get_si())});
      }
      v.require(ideal_grid_search(a, height).has_value(), "grid misses a rational witness");
    }
    if (s.certificate) {
      v.require(!s.witness && !ideal_grid_search(a, 20), "certificate case has a rational ideal");
      const auto var = sole_variable(*s.certificate);
      v.require(var && degree(to_upoly(*s.certificate, *var)) >= 2 &&
                    rational_roots(to_upoly(*s.certificate, *var)).empty(),
                "certificate has a rational root");
    }
    v.require(is_simple_dim2(a) == (!a.is_zero_product() && !s.has_ideal()), "is_simple_dim2 verdict");
  }
  // Automorphism solutions are re-verified on random algebras.
  std::size_t solved = 0;
  for (int k = 0; k < 40; ++k) {
    Algebra::Table t(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2)));
    for (auto& row : t)
      for (auto& cell : row)
        for (auto& x : cell) x = Poly(c(rng));
    const Algebra a(2, {}, t, "random");
    const SolveOutcome o = automorphism_group_dim2(a);
    if (!o.finite()) continue;
    ++solved;
    v.require(std::find(o.matrices.begin(), o.matrices.end(), QMatrix::identity(2)) != o.matrices.end(),
              "identity missing from a solved group");
    for (const auto& g : o.matrices) v.require(direct_automorphism(a, g), "solver returned a non-automorphism");
  }
  v.detail = std::to_string(finite_groups) + " finite groups, " + std::to_string(grid_cases) +
             " grid comparisons, " + std::to_string(solved) + " re-verified solves";
  return v;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  Verdict (*run)();
};

const std::vector<Criterion> kCriteria{
    {1, "trace table reproduction", 5, criterion1},
    {2, "closed-form trace cross-validation", 30, criterion2},
    {3, "matrix and octonion trace identities", 10, criterion3},
    {4, "automorphism group of E1(-1,-1,-1,-1)", 5, criterion4},
    {5, "Table 1 automorphisms", 60, criterion5},
    {6, "simplicity classification", 30, criterion6},
    {7, "generator table", 180, criterion7},
    {8, "API classification (truncated)", 120, criterion8},
    {9, "invariant bilinear forms", 30, criterion9},
    {10, "transfer identities", 5, criterion10},
    {11, "property suites", 120, criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) {
      v.pass = false;
      v.problems.push_back("time limit exceeded");
    }
    all_pass = all_pass && v.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (v.pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.title << "): " << v.detail << " ["
         << secs << " s]";
    if (!v.pass) line << "; " << v.problems.size() << " problem(s), first: " << v.problems.front();
    std::cout << line.str() << std::endl;
    if (!v.pass)
      for (std::size_t k = 0; k < v.problems.size() && k < 25; ++k) std::cerr << "  " << v.problems[k] << "\n";
  }
  return all_pass ? 0 : 1;
}
