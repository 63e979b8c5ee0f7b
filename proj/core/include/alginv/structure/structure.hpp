#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alginv/algebra/algebra.hpp"
#include "alginv/group/group.hpp"

namespace alginv {

/// Outcome of the one-dimensional ideal search in a two-dimensional algebra.
struct IdealSearch {
  /// A rational generator x of a one-dimensional ideal, if one exists.
  std::optional<Element> witness;
  /// When ideals exist only over the algebraic closure: the nonconstant gcd (in t, with
  /// x = t e1 + e2) whose roots give them.
  std::optional<Poly> certificate;

  bool has_ideal() const { return witness.has_value() || certificate.has_value(); }
};

/// Decides whether span{x} is an ideal for some nonzero x = a e1 + b e2 via the binary
/// quadratics det[x | e_i x] and det[x | x e_i]. Requires dim 2, numeric constants.
IdealSearch one_dim_ideal_witness(const Algebra& a);

/// e_i x and x e_i lie in span{x} for every basis vector.
bool verify_ideal_witness(const Algebra& a, const Element& x);

/// Nonzero multiplication and no one-dimensional ideal over the closure.
bool is_simple_dim2(const Algebra& a);

/// Oracle: tries x = e1 + t e2 for every t = p/q with |p|, q <= height, then x = e2.
std::optional<Element> ideal_grid_search(const Algebra& a, int height = 50);

/// Basis of the invariant bilinear forms, phi(e_i, e_j) = entry (i,j); computed as the
/// (1,1) component of I_2.
std::vector<QMatrix> invariant_bilinear_forms(const GroupSpec& spec);

/// Gram matrix as the polynomial sum_{ij} phi_ij x_{1i} x_{2j}, and back.
Poly form_to_poly(const QMatrix& phi);
QMatrix poly_to_form(const Poly& p, int dim);

struct FormVerdict {
  bool exists = false;
  std::optional<QMatrix> witness;
  /// Basis of the subspace considered (invariant and of the required kind).
  std::vector<QMatrix> basis;
  /// det(sum_q u_q basis_q) in the coordinates u_q.
  Poly determinant;
  /// Determinant nonzero but no witness of height <= 3 found: existence without witness.
  bool search_exhausted = false;
};

struct FormsReport {
  FormVerdict symmetric;
  FormVerdict skew;
  FormVerdict symmetric_associative;
};

/// phi(xy, z) == phi(x, yz) on all basis triples.
bool is_associative_form(const Algebra& a, const QMatrix& phi);

FormsReport classify_forms(const Algebra& a, const GroupSpec& spec);

}  // namespace alginv
