#include "alginv/autsolve/autsolve.hpp"

#include <algorithm>

#include "alginv/error.hpp"

namespace alginv {

AutSystem automorphism_system(const Algebra& a) {
  require_numeric(a, "automorphism solving");
  if (a.dim() != 2) throw DomainError("automorphism solving requires a two-dimensional algebra");
  AutSystem sys;
  for (const char* name : {"a1", "a2", "a3", "a4"}) sys.unknowns.push_back(Var::parameter(name));
  sys.candidate = PolyMatrix(2, 2);
  sys.candidate(0, 0) = Poly::variable(sys.unknowns[0]);
  sys.candidate(0, 1) = Poly::variable(sys.unknowns[1]);
  sys.candidate(1, 0) = Poly::variable(sys.unknowns[2]);
  sys.candidate(1, 1) = Poly::variable(sys.unknowns[3]);
  std::vector<Element> image;
  for (std::size_t j = 0; j < 2; ++j) image.push_back(Element({sys.candidate(0, j), sys.candidate(1, j)}));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Element diff = Element::zero(2);
      for (int l = 1; l <= 2; ++l) diff += a.constant(i, j, l) * image[static_cast<std::size_t>(l - 1)];
      diff -= a.multiply(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]);
      for (const Poly& eq : diff.coords)
        if (!eq.is_zero()) sys.equations.push_back(eq);
    }
  return sys;
}

SolveOutcome automorphism_group_dim2(const Algebra& a, const AutSolveOptions& options) {
  const AutSystem sys = automorphism_system(a);
  std::vector<Var> order;
  for (const auto& name : options.order) {
    const Var v = Var::parameter(name);
    if (std::find(sys.unknowns.begin(), sys.unknowns.end(), v) == sys.unknowns.end() ||
        std::find(order.begin(), order.end(), v) != order.end())
      throw InputError("variable order must be a permutation of a1, a2, a3, a4");
    order.push_back(v);
  }
  if (order.size() != 4) throw InputError("variable order must be a permutation of a1, a2, a3, a4");

  SolveOutcome out;
  const GroebnerResult gb = buchberger_lex(sys.equations, order, options.pair_budget);
  out.basis = gb.basis;
  if (gb.budget_exhausted) {
    out.reason = "Groebner pair budget exhausted after " + std::to_string(gb.pairs_processed) + " pairs";
    return out;
  }
  auto pts = rational_points(gb.basis, order);
  if (auto* inc = std::get_if<Inconclusive>(&pts)) {
    out.reason = inc->reason;
    out.residual = inc->residual;
    return out;
  }
  for (const Point& p : std::get<std::vector<Point>>(pts)) {
    std::map<Var, Rational> values;
    for (std::size_t i = 0; i < order.size(); ++i) values[order[i]] = p[i];
    QMatrix g(2, 2);
    g(0, 0) = values[sys.unknowns[0]];
    g(0, 1) = values[sys.unknowns[1]];
    g(1, 0) = values[sys.unknowns[2]];
    g(1, 1) = values[sys.unknowns[3]];
    out.all_points.push_back(g);
    if (determinant(g) == 0) continue;
    if (!is_automorphism(a, to_poly(g)))
      throw Error("internal: solver produced a non-automorphism " + to_string(g));
    out.matrices.push_back(g);
  }
  auto key = [](const QMatrix& m) {
    return std::vector<Rational>{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  };
  std::sort(out.matrices.begin(), out.matrices.end(),
            [&](const QMatrix& x, const QMatrix& y) { return key(x) < key(y); });
  out.closure = group_closure_check(GroupSpec::finite(2, out.matrices, "Aut"));
  out.status = SolveOutcome::Status::Finite;
  return out;
}

}  // namespace alginv
