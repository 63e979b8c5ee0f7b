#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alginv/group/group.hpp"

namespace alginv {

/// Tags accepted by builtin_group, e.g. "table1aut:A3", "table1aut:E1S3".
const std::vector<std::string>& builtin_group_tags();

/// The group listed in Table 1 for a sub-family, independent of any parameter values.
GroupSpec builtin_group(std::string_view tag);

/// The automorphism group recorded in Table 1 for the given catalog algebra and parameter
/// values, selected by the table's conditions (checked as polynomial identities, so a
/// formal condition such as beta = 2*alpha-1 is recognised). Families without a listed
/// automorphism get the trivial group. nullopt if a condition cannot be decided because
/// the parameters are formal.
std::optional<GroupSpec> table1_automorphisms(std::string_view algebra_tag,
                                              const std::map<std::string, Poly>& values);

/// The S3 of the lemma for E1(-1,-1,-1,-1), in the order displayed in the lemma.
std::vector<QMatrix> e1_s3_matrices();

}  // namespace alginv
