#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alginv/algebra/algebra.hpp"
#include "alginv/exactpoly/span.hpp"
#include "alginv/group/group.hpp"
#include "alginv/invariants/invariants.hpp"

namespace alginv {

/// Graded pieces of the trace subalgebra Tr(A)_m for a numeric algebra, built by
/// dynamic programming over multidegrees:
///   values(delta)    span of x0-free word values at the generic elements,
///   operators(delta) span of operator matrices of words with one x0,
///   traces(delta)    span of their traces,
///   algebra(delta)   traces(delta) plus products of lower algebra components.
class TraceEngine {
 public:
  TraceEngine(const Algebra& a, int m);

  const PolySpan& values(const Multidegree& delta);
  const PolySpan& operators(const Multidegree& delta);
  const PolySpan& traces(const Multidegree& delta);
  const PolySpan& algebra(const Multidegree& delta);

  /// Converts between flattened spans and elements / matrices.
  Element unflatten_element(const Poly& p) const;
  PolyMatrix unflatten_matrix(const Poly& p) const;

  int slots() const noexcept { return m_; }

 private:
  Poly flatten(const Element& e) const;
  Poly flatten(const PolyMatrix& mat) const;

  const Algebra& a_;
  int m_;
  std::vector<Var> elem_markers_;
  std::vector<Var> mat_markers_;
  std::map<Multidegree, PolySpan> values_, operators_, traces_, algebra_;
};

/// Tr(A)_m at multidegree delta, truncated: at most D leaves of x1..xm per trace factor.
GradedSpan trace_span(const Algebra& a, int m, const Multidegree& delta, int max_degree);

/// The same span by brute force: enumerate every word per sub-multidegree and multiply
/// traces. Independent route used to cross-check TraceEngine.
GradedSpan trace_span_bruteforce(const Algebra& a, int m, const Multidegree& delta);

struct ApiEntry {
  Multidegree multidegree;
  std::size_t invariant_dim = 0;
  std::size_t trace_dim = 0;
  bool included = true;  // trace span inside the invariant component
  bool equal = true;
  std::optional<Poly> witness;  // invariant outside the trace span
};

struct ApiReport {
  int slots = 0;
  int max_degree = 0;
  std::vector<ApiEntry> entries;
  bool equal_everywhere() const;
  bool included_everywhere() const;
  /// First entry that is strict, if any.
  const ApiEntry* first_strict() const;
};

/// Compares Tr(A)_m with I_m degree by degree for every multidegree with 1 <= |delta| <= D.
ApiReport api_check(const Algebra& a, const GroupSpec& spec, int m, int max_degree);

struct WeylReport {
  bool holds = true;
  std::vector<Multidegree> failures;
  std::size_t polarized_generators = 0;
};

/// Polarizes a generating set of I_2 (up to degree D) to m slots and checks that the
/// generated subalgebra fills every invariant component of F[A^m] with |delta| <= D.
/// Requires dim 2 and m > 2.
WeylReport weyl_check(const GroupSpec& spec, int m, int max_degree);

}  // namespace alginv
