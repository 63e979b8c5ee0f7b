#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "alginv/exactpoly/rational.hpp"
#include "alginv/io/json_io.hpp"

namespace alginv::cli {

enum ExitCode : int { kSuccess = 0, kInconclusive = 1, kInputError = 2, kInternalError = 3 };

struct RunConfig {
  /// catalog, algebra, trace, aut, simple, invariants, api, forms, verify-all
  std::string command;
  /// list (catalog), show (algebra), verify|solve (aut), gens (invariants)
  std::string action;
  /// File path or catalog tag.
  std::string algebra;
  /// "auto" (catalog automorphism data), "trivial", a built-in tag or a file path.
  std::string group = "auto";
  /// k=v[,k=v...]
  std::string params;
  std::optional<int> m;
  std::optional<int> max_degree;
  std::string word;
  std::string scope = "all";
  bool json = false;
  /// Empty: write to the given stream.
  std::string out;
};

/// Strict "k=v[,k=v]" with rational values; throws InputError.
std::map<std::string, Rational> parse_params(std::string_view text);

Json config_to_json(const RunConfig& cfg);

/// Dispatches one command; returns the exit code. Reports go to `out` (or cfg.out),
/// diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

std::string_view version();

}  // namespace alginv::cli
