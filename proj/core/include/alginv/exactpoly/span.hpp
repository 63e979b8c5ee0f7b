#pragma once

#include <optional>
#include <vector>

#include "alginv/exactpoly/grading.hpp"
#include "alginv/exactpoly/poly.hpp"

namespace alginv {

/// Linear span of polynomials over the rationals, kept as a fully reduced echelon basis:
/// every basis member is monic, its leading monomial (the pivot) occurs in no other member.
class PolySpan {
 public:
  PolySpan() = default;
  explicit PolySpan(const std::vector<Poly>& generators);

  /// Residue of f modulo the span; zero iff f is a member.
  Poly reduce(const Poly& f) const;
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  /// Adds f; returns true if the dimension grew.
  bool insert(const Poly& f);
  bool contains_span(const PolySpan& other) const;

  std::size_t dim() const noexcept { return basis_.size(); }
  bool empty() const noexcept { return basis_.empty(); }
  /// Basis ordered by decreasing pivot.
  const std::vector<Poly>& basis() const noexcept { return basis_; }

  friend bool operator==(const PolySpan& a, const PolySpan& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<Poly> basis_;
};

/// A homogeneous component: a span whose members all have one multidegree.
struct GradedSpan {
  Multidegree multidegree;
  PolySpan span;

  std::size_t dim() const { return span.dim(); }
  const std::vector<Poly>& basis() const { return span.basis(); }
};

/// Basis of the complement of `sub` inside `whole`: for each member of whole's basis in
/// order, keep its residue modulo sub + kept so far. Results are monic, reduced against
/// sub and each other.
std::vector<Poly> complement_basis(const PolySpan& whole, const PolySpan& sub);

}  // namespace alginv
