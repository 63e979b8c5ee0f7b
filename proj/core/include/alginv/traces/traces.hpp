#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alginv/algebra/algebra.hpp"
#include "alginv/traces/word.hpp"

namespace alginv {

/// The matrix of b -> h(b, X_1, ..., X_m): column j holds the coordinates of h with
/// chi_0 = e_j and chi_r = X_r. Throws DomainError unless h has degree 1 in chi_0 and
/// letters at most m.
PolyMatrix word_operator(const Algebra& a, const Word& h, int m);

/// tr(h) computed by generic evaluation.
Poly trace_of_word(const Algebra& a, const Word& h, int m);

/// The composition P^1_{h_1} o ... o P^k_{h_k} (chi_0), listed outermost first.
struct WordShape {
  std::vector<std::pair<Side, Word>> factors;

  /// Decomposes a word of degree 1 in chi_0; nullopt for the bare letter chi_0.
  static std::optional<WordShape> from_word(const Word& h);
  Word to_word() const;
  /// Largest multiplier degree.
  int max_multiplier_degree() const;
};

/// Closed-form trace: the multi-index sum of traces of products of (double) operator
/// matrices against coordinate monomials. Multipliers must have degree 1 or 2; throws
/// DomainError otherwise.
Poly trace_closed_form(const Algebra& a, const WordShape& shape);

struct TraceTableEntry {
  std::string label;  // symbolic shape, e.g. "tr(x_r*(x_s*x_0))"
  Word word;          // instantiated with r=1, s=2, t=3
  Poly value;
};

/// The shapes appearing in the two-dimensional trace table, each evaluated at r=1,s=2,t=3.
/// Throws DomainError unless dim is 2.
std::vector<TraceTableEntry> trace_table_report(const Algebra& a);

}  // namespace alginv
