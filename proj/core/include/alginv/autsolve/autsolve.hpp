#pragma once

#include <string>
#include <vector>

#include "alginv/algebra/algebra.hpp"
#include "alginv/autsolve/groebner.hpp"
#include "alginv/group/group.hpp"

namespace alginv {

struct AutSystem {
  /// a1..a4 for the candidate [[a1,a2],[a3,a4]].
  std::vector<Var> unknowns;
  /// Nonzero l-coordinates of g(e_i e_j) - g(e_i) g(e_j).
  std::vector<Poly> equations;
  PolyMatrix candidate;
};

AutSystem automorphism_system(const Algebra& a);

struct SolveOutcome {
  enum class Status { Finite, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<QMatrix> matrices;  // invertible solutions, sorted
  std::vector<QMatrix> all_points;  // every rational solution before the determinant filter
  ClosureReport closure;
  std::string reason;
  std::vector<Poly> basis;
  std::optional<Poly> residual;

  bool finite() const { return status == Status::Finite; }
};

struct AutSolveOptions {
  /// Most significant first; default a4, a3, a2, a1.
  std::vector<std::string> order{"a4", "a3", "a2", "a1"};
  std::size_t pair_budget = kDefaultPairBudget;
};

SolveOutcome automorphism_group_dim2(const Algebra& a, const AutSolveOptions& options = {});

}  // namespace alginv
