#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "alginv/algebra/algebra.hpp"
#include "alginv/exactpoly/grading.hpp"
#include "alginv/exactpoly/matrix.hpp"

namespace alginv {

/// A finite list of invertible rational matrices.
struct FiniteGroup {
  std::vector<QMatrix> elements;
};

/// The matrices obtained from `matrix` by assigning the family parameters subject to
/// nonzero[k] != 0 and unequal[k].first != unequal[k].second.
struct GroupFamily {
  PolyMatrix matrix;
  std::vector<std::string> params;
  std::vector<Poly> nonzero;
  std::vector<std::pair<Poly, Poly>> unequal;
};

/// A group of linear maps of an n-dimensional space, presented as a union of finite
/// lists and parametric families. Matrices act on the basis by columns:
/// g(e_j) = sum_i g_ij e_i.
class GroupSpec {
 public:
  using Part = std::variant<FiniteGroup, GroupFamily>;

  GroupSpec() = default;
  /// Validates shapes and invertibility; adds the identity to finite parts that lack it
  /// and drops duplicates, recording warnings.
  GroupSpec(int dim, std::vector<Part> parts, std::string name = {});

  static GroupSpec trivial(int dim);
  static GroupSpec finite(int dim, std::vector<QMatrix> elements, std::string name = {});
  static GroupSpec family(int dim, GroupFamily fam, std::string name = {});

  int dim() const noexcept { return dim_; }
  const std::vector<Part>& parts() const noexcept { return parts_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  bool is_finite() const;
  /// All elements when finite (union of finite parts, deduplicated).
  std::vector<QMatrix> finite_elements() const;
  /// True if every element is the identity.
  bool is_trivial() const;

 private:
  int dim_ = 0;
  std::vector<Part> parts_;
  std::string name_;
  std::vector<std::string> warnings_;
};

/// g(e_i e_j) == g(e_i) g(e_j) for all i, j, as a polynomial identity in every symbol.
bool is_automorphism(const Algebra& a, const PolyMatrix& g);
/// Every element of every part (families as identities in their parameters).
bool is_automorphism(const Algebra& a, const GroupSpec& spec);

/// f with x_{ri} replaced by sum_j g_ij x_{rj} for every slot r, so act(g,f)(x) = f(g x)
/// and act(h, act(g, f)) = act(g h, f).
Poly act(const PolyMatrix& g, const Poly& f);
Poly act(const QMatrix& g, const Poly& f);

/// A homogeneous linear system over the coefficients of `unknowns`.
struct LinearSystem {
  std::vector<Monomial> unknowns;
  QMatrix matrix;  // rows are equations
};

/// Conditions on f = sum_k c_k unknowns[k] (all monomials of multidegree delta) for
/// act(g,f) = f over the whole spec. A family contributes every coefficient of
/// act(g,f) - f viewed as a polynomial in the family parameters.
LinearSystem invariance_conditions(const GroupSpec& spec, const Multidegree& delta);

struct ClosureReport {
  bool closed = false;
  bool abelian = false;
  std::size_t order = 0;
  /// cayley[i][j] = index of elements[i]*elements[j], or -1 if outside the list.
  std::vector<std::vector<int>> cayley;
  std::vector<QMatrix> elements;
};

/// Finite groups only; throws DomainError on a singular element or a family part.
ClosureReport group_closure_check(const GroupSpec& spec);

/// Instantiates a family; throws InputError on a violated constraint or a singular result.
QMatrix sample_family(const GroupFamily& fam, const std::map<std::string, Rational>& assignment);

/// Deterministic pseudo-random admissible samples with small-height rational parameters.
std::vector<QMatrix> random_family_samples(const GroupFamily& fam, std::size_t count, std::uint64_t seed);

/// Finite elements plus `per_family` samples of every family part.
std::vector<QMatrix> sample_elements(const GroupSpec& spec, std::size_t per_family, std::uint64_t seed);

}  // namespace alginv
