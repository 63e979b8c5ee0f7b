#include "alginv/structure/structure.hpp"

#include <numeric>

#include "alginv/error.hpp"
#include "alginv/exactpoly/univariate.hpp"
#include "alginv/invariants/invariants.hpp"

namespace alginv {
namespace {

void require_dim2(const Algebra& a, const char* op) {
  require_numeric(a, op);
  if (a.dim() != 2) throw DomainError(std::string(op) + " requires a two-dimensional algebra");
}

Rational as_rational(const Poly& p) {
  if (!p.is_constant()) throw DomainError("expected a numeric value, got " + p.to_string());
  return p.constant_term();
}

// det[x | e_i x] and det[x | x e_i] as forms in (a, b) with x = a e1 + b e2.
std::vector<Poly> ideal_quadratics(const Algebra& alg, const Poly& a, const Poly& b) {
  Element x({a, b});
  std::vector<Poly> out;
  for (int i = 1; i <= 2; ++i) {
    const Element ei = Element::basis(2, i);
    for (const Element& y : {alg.multiply(ei, x), alg.multiply(x, ei)}) {
      Poly d = a * y.coords[1] - b * y.coords[0];
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

Element normalized(const Rational& a, const Rational& b) {
  if (a != 0) return Element({Poly(1), Poly(Rational(b / a))});
  return Element({Poly(0), Poly(1)});
}

}  // namespace

bool verify_ideal_witness(const Algebra& a, const Element& x) {
  require_numeric(a, "ideal verification");
  if (x.dim() != a.dim()) throw DomainError("witness dimension mismatch");
  if (x.is_zero()) return false;
  const auto n = static_cast<std::size_t>(a.dim());
  for (int i = 1; i <= a.dim(); ++i) {
    const Element ei = Element::basis(a.dim(), i);
    for (const Element& y : {a.multiply(ei, x), a.multiply(x, ei)}) {
      QMatrix m(n, 2);
      for (std::size_t r = 0; r < n; ++r) {
        m(r, 0) = as_rational(x.coords[r]);
        m(r, 1) = as_rational(y.coords[r]);
      }
      if (rank(m) > 1) return false;
    }
  }
  return true;
}

IdealSearch one_dim_ideal_witness(const Algebra& alg) {
  require_dim2(alg, "ideal search");
  IdealSearch out;
  // b = 0: the only candidate line is span{e1}.
  if (ideal_quadratics(alg, Poly(1), Poly(0)).empty()) {
    out.witness = Element::basis(2, 1);
    return out;
  }
  const Var t = Var::parameter("_t");
  const auto quads = ideal_quadratics(alg, Poly::variable(t), Poly(1));
  if (quads.empty()) {
    out.witness = Element::basis(2, 2);
    return out;
  }
  UPoly g = to_upoly(quads.front(), t);
  for (std::size_t k = 1; k < quads.size(); ++k) g = gcd(g, to_upoly(quads[k], t));
  if (degree(g) < 1) return out;
  const auto roots = rational_roots(g);
  if (!roots.empty()) {
    out.witness = normalized(roots.front(), 1);
    return out;
  }
  out.certificate = from_upoly(g, t);
  return out;
}

bool is_simple_dim2(const Algebra& a) {
  require_dim2(a, "simplicity test");
  if (a.is_zero_product()) return false;
  return !one_dim_ideal_witness(a).has_ideal();
}

std::optional<Element> ideal_grid_search(const Algebra& a, int height) {
  require_dim2(a, "grid search");
  for (int q = 1; q <= height; ++q)
    for (int p = -height; p <= height; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Element x({Poly(1), Poly(make_rational(p, q))});
      if (verify_ideal_witness(a, x)) return x;
    }
  Element e2 = Element::basis(2, 2);
  if (verify_ideal_witness(a, e2)) return e2;
  return std::nullopt;
}

Poly form_to_poly(const QMatrix& phi) {
  Poly out;
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (phi(i, j) != 0)
        out += phi(i, j) * (Poly::coordinate(1, static_cast<int>(i) + 1) *
                            Poly::coordinate(2, static_cast<int>(j) + 1));
  return out;
}

QMatrix poly_to_form(const Poly& p, int dim) {
  const auto n = static_cast<std::size_t>(dim);
  QMatrix out(n, n);
  for (const auto& [mono, coeff] : p.terms()) {
    const auto& f = mono.factors();
    if (f.size() != 2 || f[0].second != 1 || f[1].second != 1 || !f[0].first.is_coordinate() ||
        f[0].first.slot() != 1 || f[1].first.slot() != 2)
      throw DomainError("not a bilinear form in x1, x2: " + p.to_string());
    out(static_cast<std::size_t>(f[0].first.index() - 1), static_cast<std::size_t>(f[1].first.index() - 1)) =
        coeff;
  }
  return out;
}

std::vector<QMatrix> invariant_bilinear_forms(const GroupSpec& spec) {
  const int n = spec.dim();
  Multidegree delta(2, 0);
  delta[0] = delta[1] = 1;
  std::vector<QMatrix> out;
  const GradedSpan fixed = fixed_subspace(spec, 2, delta);
  for (const Poly& p : fixed.basis()) out.push_back(poly_to_form(p, n));
  return out;
}

bool is_associative_form(const Algebra& a, const QMatrix& phi) {
  require_numeric(a, "associativity test");
  const int n = a.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Rational lhs = 0, rhs = 0;
        for (int l = 1; l <= n; ++l) {
          lhs += as_rational(a.constant(i, j, l)) * phi(l - 1, k - 1);
          rhs += as_rational(a.constant(j, k, l)) * phi(i - 1, l - 1);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

enum class Kind { Symmetric, Skew, SymmetricAssociative };

// Rows of the linear conditions on coefficients c_k of sum_k c_k B_k.
std::vector<std::vector<Rational>> kind_conditions(const Algebra& a, const std::vector<QMatrix>& basis,
                                                   Kind kind) {
  const std::size_t n = static_cast<std::size_t>(a.dim());
  std::vector<std::vector<Rational>> rows;
  auto add = [&](auto entry) {
    std::vector<Rational> row(basis.size());
    bool nonzero = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      row[k] = entry(basis[k]);
      nonzero = nonzero || row[k] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (kind == Kind::Skew)
        add([&](const QMatrix& b) { return Rational(b(i, j) + b(j, i)); });
      else if (i < j)
        add([&](const QMatrix& b) { return Rational(b(i, j) - b(j, i)); });
    }
  if (kind == Kind::SymmetricAssociative)
    for (int i = 1; i <= a.dim(); ++i)
      for (int j = 1; j <= a.dim(); ++j)
        for (int k = 1; k <= a.dim(); ++k)
          add([&](const QMatrix& b) {
            Rational v = 0;
            for (int l = 1; l <= a.dim(); ++l)
              v += as_rational(a.constant(i, j, l)) * b(l - 1, k - 1) -
                   as_rational(a.constant(j, k, l)) * b(i - 1, l - 1);
            return v;
          });
  return rows;
}

FormVerdict analyse(const Algebra& a, const std::vector<QMatrix>& invariant, Kind kind) {
  FormVerdict out;
  const std::size_t n = static_cast<std::size_t>(a.dim());
  if (invariant.empty()) {
    out.determinant = Poly(0);
    return out;
  }
  const auto rows = kind_conditions(a, invariant, kind);
  std::vector<std::vector<Rational>> coeffs;
  if (rows.empty()) {
    for (std::size_t k = 0; k < invariant.size(); ++k) {
      std::vector<Rational> e(invariant.size());
      e[k] = 1;
      coeffs.push_back(std::move(e));
    }
  } else {
    QMatrix m(rows.size(), invariant.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < invariant.size(); ++k) m(r, k) = rows[r][k];
    coeffs = nullspace(m);
  }
  for (const auto& c : coeffs) {
    QMatrix b(n, n);
    for (std::size_t k = 0; k < invariant.size(); ++k)
      if (c[k] != 0) b += QMatrix(invariant[k]).scale(c[k]);
    out.basis.push_back(std::move(b));
  }
  if (out.basis.empty()) {
    out.determinant = Poly(0);
    return out;
  }
  PolyMatrix general(n, n);
  for (std::size_t q = 0; q < out.basis.size(); ++q) {
    const Poly u = Poly::parameter("_u" + std::to_string(q + 1));
    general += to_poly(out.basis[q]).scale(u);
  }
  out.determinant = determinant(general);
  out.exists = !out.determinant.is_zero();
  if (!out.exists) return out;

  // Odometer over coordinates in {0, 1, -1, 2, -2, 3, -3}, first coordinate fastest.
  static const int kValues[] = {0, 1, -1, 2, -2, 3, -3};
  const std::size_t p = out.basis.size();
  std::vector<std::size_t> digits(p, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < p && ++digits[pos] == std::size(kValues)) digits[pos++] = 0;
    if (pos == p) break;
    QMatrix cand(n, n);
    for (std::size_t q = 0; q < p; ++q)
      if (kValues[digits[q]] != 0) cand += QMatrix(out.basis[q]).scale(Rational(kValues[digits[q]]));
    if (determinant(cand) != 0) {
      out.witness = std::move(cand);
      return out;
    }
  }
  out.search_exhausted = true;
  return out;
}

}  // namespace

FormsReport classify_forms(const Algebra& a, const GroupSpec& spec) {
  require_numeric(a, "form classification");
  if (spec.dim() != a.dim()) throw DomainError("group and algebra dimensions differ");
  const auto invariant = invariant_bilinear_forms(spec);
  FormsReport out;
  out.symmetric = analyse(a, invariant, Kind::Symmetric);
  out.skew = analyse(a, invariant, Kind::Skew);
  out.symmetric_associative = analyse(a, invariant, Kind::SymmetricAssociative);
  return out;
}

}  // namespace alginv
