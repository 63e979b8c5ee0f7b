#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alginv/exactpoly/grading.hpp"
#include "alginv/exactpoly/span.hpp"
#include "alginv/group/group.hpp"

namespace alginv {

constexpr int kMaxSlots = 4;
constexpr int kMaxComponentDegree = 8;

/// Throws CapExceeded unless 1 <= m <= kMaxSlots and 0 <= |delta| <= kMaxComponentDegree.
void check_invariant_caps(int m, const Multidegree& delta);

/// Basis of the invariants of multidegree delta in F[A^m] (A of dimension spec.dim()).
GradedSpan fixed_subspace(const GroupSpec& spec, int m, const Multidegree& delta);

/// Memoizes fixed_subspace per multidegree for one (spec, m).
class InvariantCache {
 public:
  InvariantCache(const GroupSpec& spec, int m) : spec_(spec), m_(m) {}
  const GradedSpan& fixed(const Multidegree& delta);
  const GroupSpec& spec() const noexcept { return spec_; }
  int slots() const noexcept { return m_; }

 private:
  const GroupSpec& spec_;
  int m_;
  std::map<Multidegree, GradedSpan> cache_;
};

/// Transfer map: sum over the finite group of act(g, f).
Poly reynolds(const GroupSpec& spec, const Poly& f);

/// Distinct nonzero coefficients of f(x_{r,i} -> sum_s a_{r,s} x_{s,i}) as a polynomial in
/// the fresh indeterminates a_{r,s}, for source slots r <= l and target slots s <= m.
std::vector<Poly> polarize(const Poly& f, int l, int m);

/// pi_rbar: source slots are cut into consecutive runs of lengths parts[0], parts[1], ...;
/// every slot of run k becomes slot k+1. Requires f to use at most sum(parts) slots.
Poly restitute(const Poly& f, const std::vector<int>& parts);

struct GeneratorReport {
  int slots = 0;
  int max_degree = 0;
  /// New generators per multidegree (only multidegrees with at least one), graded order.
  std::vector<std::pair<Multidegree, std::vector<Poly>>> generators;
  /// Dimension of the invariant component for every multidegree visited.
  std::map<Multidegree, std::size_t> invariant_dims;
  /// Each generator lies outside the span of products of lower-degree invariants: no
  /// proper subset generates. True by construction; recorded for reports.
  bool minimal = true;
  /// The literal test: no generator's multidegree is a sum (with repetition) of the
  /// multidegrees of the other generators.
  bool multidegree_irreducible = true;
  /// Generators the literal test rejects, with a decomposition of their multidegree.
  std::vector<std::string> irreducibility_violations;

  std::size_t count(const Multidegree& delta) const;
  std::size_t total_count() const;
  std::vector<Poly> all() const;
};

/// Generators of I_m up to total degree D: at each multidegree, a complement of the
/// span of products of lower invariant components inside the fixed subspace.
GeneratorReport minimal_generators(const GroupSpec& spec, int m, int max_degree);

/// Literal multidegree-irreducibility of a list of multidegrees; on failure returns an
/// explanation for each offending entry.
std::vector<std::string> multidegree_irreducibility_violations(const std::vector<Multidegree>& degrees);

/// The graded subalgebra generated by `generators` (homogeneous), at multidegree delta.
/// Components of lower multidegree are memoized in `cache`.
class GeneratedAlgebra {
 public:
  GeneratedAlgebra(std::vector<Poly> generators, int m);
  const PolySpan& component(const Multidegree& delta);

 private:
  int m_;
  std::map<Multidegree, PolySpan> base_;
  std::map<Multidegree, PolySpan> cache_;
};

/// Default total-degree bound: max(|G|, 4) for finite groups, 4 otherwise.
int default_degree_bound(const GroupSpec& spec);

/// All nonzero multidegrees of length m with total degree at most D, graded order.
std::vector<Multidegree> multidegrees_up_to(int m, int max_degree);

}  // namespace alginv
