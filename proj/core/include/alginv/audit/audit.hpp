#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alginv/exactpoly/rational.hpp"

namespace alginv {

enum class AuditScope { Traces, Aut, Simple, Gens, Api, Forms, All };

std::optional<AuditScope> parse_audit_scope(std::string_view name);
std::string to_string(AuditScope scope);

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  std::string scope;
  std::vector<ClaimResult> claims;

  bool all_pass() const;
  std::size_t failures() const;
};

/// Runs the catalogued checks of the given scope at the default parameter samples;
/// claims are sorted by identifier.
AuditReport verify_all(AuditScope scope);

using Assignment = std::map<std::string, Rational>;

/// {-2, -1, -1/2, 1/2, 1, 2, 3}.
const std::vector<Rational>& default_sample_values();

/// Deterministic spread of `count` assignments of `params` over the default values,
/// keeping those accepted by `admissible`.
std::vector<Assignment> sample_assignments(const std::vector<std::string>& params, std::size_t count,
                                           const std::function<bool(const Assignment&)>& admissible = {});

/// Side conditions attached to a Table 1 family row (e.g. alpha+beta != 1 for D2, D3;
/// gamma not in {0, 1} for E3). Orbit-representative conditions are not checked.
bool table1_admissible(std::string_view tag, const Assignment& values);

/// The verdict of the two-dimensional simplicity classification for a Table 1 algebra.
bool table1_expected_simple(std::string_view tag, const Assignment& values);

std::string describe(std::string_view tag, const Assignment& values);

}  // namespace alginv
