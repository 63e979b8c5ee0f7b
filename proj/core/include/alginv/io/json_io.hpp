#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "alginv/algebra/algebra.hpp"
#include "alginv/autsolve/autsolve.hpp"
#include "alginv/group/group.hpp"
#include "alginv/invariants/invariants.hpp"
#include "alginv/invariants/trace_algebra.hpp"
#include "alginv/structure/structure.hpp"
#include "alginv/traces/traces.hpp"

namespace alginv {

using Json = nlohmann::ordered_json;

/// {"dim": n, "params": [...], "table": [[[c1..cn], ...], ...]} with coefficient strings.
Json algebra_to_json(const Algebra& a);
/// Throws InputError on any schema violation.
Algebra algebra_from_json(const Json& j, std::string name = {});

/// {"type":"finite","matrices":[...]}, {"type":"family",...} or {"type":"union","parts":[...]}.
Json group_to_json(const GroupSpec& g);
/// `dim` is enforced when positive.
GroupSpec group_from_json(const Json& j, int dim = 0, std::string name = {});

Json to_json(const QMatrix& m);
Json to_json(const PolyMatrix& m);
Json to_json(const Multidegree& d);
Json to_json(const Element& e);

Json trace_table_to_json(const std::vector<TraceTableEntry>& rows);
Json generators_to_json(const GeneratorReport& r);
Json api_to_json(const ApiReport& r);
Json form_verdict_to_json(const FormVerdict& v);
Json forms_to_json(const FormsReport& r);
Json outcome_to_json(const SolveOutcome& o);
Json ideal_search_to_json(const Algebra& a, const IdealSearch& s);

}  // namespace alginv
