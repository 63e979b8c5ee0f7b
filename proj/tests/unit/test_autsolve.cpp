#include <gtest/gtest.h>

#include "alginv/algebra/catalog.hpp"
#include "alginv/autsolve/autsolve.hpp"
#include "alginv/autsolve/groebner.hpp"
#include "alginv/error.hpp"
#include "alginv/group/group.hpp"
#include "support.hpp"

using namespace alginv;
using namespace alginv::testing;

namespace {

const Var kX = Var::parameter("a"), kY = Var::parameter("b"), kZ = Var::parameter("c");

}  // namespace

TEST(Groebner, ReducedBasisOfASmallIdeal) {
  const GroebnerResult r = buchberger_lex({P("a*b-1"), P("a-b")}, {kX, kY});
  ASSERT_EQ(r.basis.size(), 2u);
  EXPECT_EQ(r.basis[0], P("a-b"));
  EXPECT_EQ(r.basis[1], P("b^2-1"));
  EXPECT_FALSE(r.budget_exhausted);
}

TEST(Groebner, InputLiesInTheIdealAndBasisIsReduced) {
  const std::vector<Poly> eqs{P("a^2+b*c-2"), P("a*b-c"), P("c^2-a+b")};
  const std::vector<Var> order{kX, kY, kZ};
  const GroebnerResult r = buchberger_lex(eqs, order);
  for (const Poly& e : eqs) EXPECT_TRUE(lex_normal_form(e, r.basis, order).is_zero());
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    std::vector<Poly> others = r.basis;
    others.erase(others.begin() + static_cast<long>(i));
    EXPECT_EQ(lex_normal_form(r.basis[i], others, order), r.basis[i]);
  }
  EXPECT_TRUE(is_zero_dimensional(r.basis, order));
}

TEST(Groebner, UnitIdealAndBudget) {
  const GroebnerResult unit = buchberger_lex({P("a"), P("a-1")}, {kX});
  ASSERT_EQ(unit.basis.size(), 1u);
  EXPECT_EQ(unit.basis[0], Poly(1));
  const auto pts = std::get<std::vector<Point>>(rational_points(unit.basis, {kX}));
  EXPECT_TRUE(pts.empty());
  const GroebnerResult tiny = buchberger_lex({P("a^2+b*c-2"), P("a*b-c"), P("c^2-a+b")}, {kX, kY, kZ}, 1);
  EXPECT_TRUE(tiny.budget_exhausted);
  EXPECT_THROW(buchberger_lex({P("a*x1")}, {kX}), InputError);
}

TEST(RationalPoints, FinitelyManyAndInconclusive) {
  const std::vector<Var> order{kX, kY};
  const auto ok = rational_points(buchberger_lex({P("a*b-1"), P("a-b")}, order).basis, order);
  const auto& pts = std::get<std::vector<Point>>(ok);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], (Point{-1, -1}));
  EXPECT_EQ(pts[1], (Point{1, 1}));
  const auto irr = rational_points(buchberger_lex({P("a^2-2"), P("b-1")}, order).basis, order);
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(irr));
  EXPECT_TRUE(std::get<Inconclusive>(irr).residual.has_value());
  const auto mixed = rational_points(buchberger_lex({P("(a^2-2)*(a-1)"), P("b-a")}, order).basis, order);
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(mixed));
  const auto inf = rational_points(buchberger_lex({P("a*b")}, order).basis, order);
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(inf));
  EXPECT_NE(std::get<Inconclusive>(inf).reason.find("positive-dimensional"), std::string::npos);
}

TEST(AutSolve, SystemOfTheS3Lemma) {
  const Algebra a = catalog("E1", Assign{{"alpha", -1}, {"beta", -1}, {"gamma", -1}, {"delta", -1}});
  const AutSystem sys = automorphism_system(a);
  EXPECT_EQ(sys.unknowns.size(), 4u);
  // a1 (1 + 2 a3 - a1) = 0 is one of the conditions (up to sign).
  const Poly first = P("a*(1+2*c-a)");
  const auto rename = [](const Poly& f) {
    return substitute(f, {{Var::parameter("a"), Poly::parameter("a1")}, {Var::parameter("c"), Poly::parameter("a3")}});
  };
  const Poly target = rename(first);
  bool found = false;
  for (const Poly& e : sys.equations) found = found || e == target || e == -target;
  EXPECT_TRUE(found);
}

TEST(AutSolve, Outcomes) {
  const SolveOutcome e4 = automorphism_group_dim2(catalog("E4"));
  ASSERT_TRUE(e4.finite());
  EXPECT_EQ(e4.matrices, std::vector<QMatrix>{QMatrix::identity(2)});
  const SolveOutcome d1 = automorphism_group_dim2(catalog("D1", Assign{{"alpha", 2}, {"beta", 3}}));
  ASSERT_TRUE(d1.finite());
  EXPECT_EQ(d1.matrices.size(), 2u);
  EXPECT_NE(std::find(d1.matrices.begin(), d1.matrices.end(), M2(1, 1, 0, -1)), d1.matrices.end());
  EXPECT_TRUE(d1.closure.closed);
  for (const auto& g : d1.matrices) EXPECT_TRUE(is_automorphism(catalog("D1", Assign{{"alpha", 2}, {"beta", 3}}), to_poly(g)));
  const SolveOutcome n = automorphism_group_dim2(catalog("N"));
  EXPECT_FALSE(n.finite());
  EXPECT_NE(n.reason.find("positive-dimensional"), std::string::npos);
  EXPECT_FALSE(automorphism_group_dim2(catalog("A1", Assign{{"alpha", 2}})).finite());
}

TEST(AutSolve, VariableOrderIndependence) {
  const Algebra a = catalog("E1", Assign{{"alpha", -1}, {"beta", -1}, {"gamma", -1}, {"delta", -1}});
  AutSolveOptions opt;
  opt.order = {"a1", "a2", "a3", "a4"};
  const SolveOutcome x = automorphism_group_dim2(a, opt), y = automorphism_group_dim2(a);
  ASSERT_TRUE(x.finite() && y.finite());
  EXPECT_EQ(x.matrices, y.matrices);
  opt.order = {"a1", "a1", "a3", "a4"};
  EXPECT_THROW(automorphism_group_dim2(a, opt), InputError);
  EXPECT_THROW(automorphism_group_dim2(catalog("A1")), DomainError);
  AutSolveOptions tiny;
  tiny.pair_budget = 1;
  const SolveOutcome t = automorphism_group_dim2(a, tiny);
  EXPECT_FALSE(t.finite());
}
