#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alginv/algebra/algebra.hpp"

namespace alginv {

struct CatalogEntry {
  std::string tag;                  // e.g. "table1:A1"
  std::vector<std::string> params;  // formal parameter names, in order
  std::string description;
};

/// Every built-in algebra: the Table 1 families, Mat(2), Mat(3) and the split octonions.
const std::vector<CatalogEntry>& catalog_entries();

/// Normalizes "A1", "table1:A1", "mat:2", "Mat(2)", "oct" to canonical tags; nullopt if unknown.
std::optional<std::string> canonical_tag(std::string_view name);

/// Builds a catalog algebra. Parameters absent from `values` stay formal under their
/// default names; given values may be rationals or polynomials in other symbols (their
/// symbols become the algebra's parameters). Throws InputError for unknown names,
/// undeclared parameter keys, and E3 with a formal or zero gamma.
Algebra catalog(std::string_view name, const std::map<std::string, Poly>& values = {});
Algebra catalog(std::string_view name, const std::map<std::string, Rational>& values);

/// The matrix algebra Mat(n) with basis E_{ii'} at index (i-1)n+i'.
Algebra matrix_algebra(int n);
/// The split octonions with basis alpha, u1..u3, v1..v3, beta.
Algebra split_octonions();

}  // namespace alginv
