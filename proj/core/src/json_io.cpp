#include "alginv/io/json_io.hpp"

#include "alginv/error.hpp"
#include "alginv/exactpoly/parse.hpp"

namespace alginv {
namespace {

[[noreturn]] void schema(const std::string& msg) { throw InputError("schema violation: " + msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) schema(std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Poly coefficient(const Json& j, const VariableTable& vars) {
  if (j.is_string()) return parse_expr(j.get<std::string>(), vars);
  if (j.is_number_integer()) return Poly(static_cast<long>(j.get<std::int64_t>()));
  schema("coefficients must be strings or integers");
}

PolyMatrix poly_matrix(const Json& j, const VariableTable& vars, int dim) {
  if (!j.is_array() || j.empty()) schema("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  if (dim > 0 && n != static_cast<std::size_t>(dim)) schema("matrix has the wrong number of rows");
  PolyMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) schema("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) out(r, c) = coefficient(j[r][c], vars);
  }
  return out;
}

GroupSpec::Part part_from_json(const Json& j, int& dim) {
  const std::string type = field(j, "type").is_string() ? field(j, "type").get<std::string>() : "";
  if (type == "finite") {
    const Json& mats = field(j, "matrices");
    if (!mats.is_array() || mats.empty()) schema("\"matrices\" must be a nonempty array");
    FiniteGroup fin;
    for (const auto& m : mats) {
      PolyMatrix pm = poly_matrix(m, VariableTable::params_only({}), dim);
      dim = static_cast<int>(pm.rows());
      fin.elements.push_back(to_rational(pm));
    }
    return fin;
  }
  if (type == "family") {
    GroupFamily fam;
    fam.params = j.contains("params") ? string_list(j["params"], "\"params\"") : std::vector<std::string>{};
    const auto vars = VariableTable::params_only(fam.params);
    fam.matrix = poly_matrix(field(j, "matrix"), vars, dim);
    dim = static_cast<int>(fam.matrix.rows());
    if (j.contains("nonzero")) {
      if (!j["nonzero"].is_array()) schema("\"nonzero\" must be an array");
      for (const auto& x : j["nonzero"]) fam.nonzero.push_back(coefficient(x, vars));
    }
    if (j.contains("unequal")) {
      if (!j["unequal"].is_array()) schema("\"unequal\" must be an array of pairs");
      for (const auto& p : j["unequal"]) {
        if (!p.is_array() || p.size() != 2) schema("\"unequal\" entries must be pairs");
        fam.unequal.emplace_back(coefficient(p[0], vars), coefficient(p[1], vars));
      }
    }
    return fam;
  }
  schema("group \"type\" must be \"finite\", \"family\" or \"union\"");
}

void parts_from_json(const Json& j, int& dim, std::vector<GroupSpec::Part>& out) {
  const Json& type = field(j, "type");
  if (type.is_string() && type.get<std::string>() == "union") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array() || parts.empty()) schema("\"parts\" must be a nonempty array");
    for (const auto& p : parts) parts_from_json(p, dim, out);
    return;
  }
  out.push_back(part_from_json(j, dim));
}

Json string_matrix(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json poly_list(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const Poly& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

Json algebra_to_json(const Algebra& a) {
  Json table = Json::array();
  for (int i = 1; i <= a.dim(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= a.dim(); ++j) {
      Json vec = Json::array();
      for (int l = 1; l <= a.dim(); ++l) vec.push_back(a.constant(i, j, l).to_string());
      row.push_back(std::move(vec));
    }
    table.push_back(std::move(row));
  }
  return Json{{"dim", a.dim()}, {"params", a.params()}, {"table", std::move(table)}};
}

Algebra algebra_from_json(const Json& j, std::string name) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer()) schema("\"dim\" must be an integer");
  const auto dim = dim_j.get<std::int64_t>();
  if (dim < 1 || dim > kMaxAlgebraDim) schema("\"dim\" must be between 1 and 16");
  const auto params = j.contains("params") ? string_list(j["params"], "\"params\"") : std::vector<std::string>{};
  for (const auto& p : params)
    if (!is_valid_parameter_name(p)) schema("invalid parameter name \"" + p + "\"");
  const auto vars = VariableTable::params_only(params);
  const Json& table_j = field(j, "table");
  const auto n = static_cast<std::size_t>(dim);
  if (!table_j.is_array() || table_j.size() != n) schema("\"table\" must have dim rows");
  Algebra::Table table(n, std::vector<std::vector<Poly>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!table_j[i].is_array() || table_j[i].size() != n) schema("\"table\" rows must have dim entries");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& vec = table_j[i][k];
      if (!vec.is_array() || vec.size() != n) schema("each product must be a vector of dim coefficients");
      for (const auto& c : vec) table[i][k].push_back(coefficient(c, vars));
    }
  }
  return Algebra(static_cast<int>(dim), params, std::move(table), std::move(name));
}

Json group_to_json(const GroupSpec& g) {
  Json parts = Json::array();
  for (const auto& part : g.parts()) {
    if (const auto* fin = std::get_if<FiniteGroup>(&part)) {
      Json mats = Json::array();
      for (const auto& m : fin->elements) mats.push_back(to_json(m));
      parts.push_back(Json{{"type", "finite"}, {"matrices", std::move(mats)}});
    } else {
      const auto& fam = std::get<GroupFamily>(part);
      Json unequal = Json::array();
      for (const auto& [x, y] : fam.unequal) unequal.push_back(Json::array({x.to_string(), y.to_string()}));
      parts.push_back(Json{{"type", "family"},
                           {"params", fam.params},
                           {"matrix", string_matrix(fam.matrix)},
                           {"nonzero", poly_list(fam.nonzero)},
                           {"unequal", std::move(unequal)}});
    }
  }
  if (parts.size() == 1) return parts[0];
  return Json{{"type", "union"}, {"parts", std::move(parts)}};
}

GroupSpec group_from_json(const Json& j, int dim, std::string name) {
  std::vector<GroupSpec::Part> parts;
  int d = dim;
  parts_from_json(j, d, parts);
  return GroupSpec(d, std::move(parts), std::move(name));
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const PolyMatrix& m) { return string_matrix(m); }

Json to_json(const Multidegree& d) { return Json(d); }

Json to_json(const Element& e) { return e.to_string(); }

Json trace_table_to_json(const std::vector<TraceTableEntry>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"shape", r.label}, {"word", r.word.to_string()}, {"trace", r.value.to_string()}});
  return out;
}

Json generators_to_json(const GeneratorReport& r) {
  Json gens = Json::array();
  for (const auto& [delta, ps] : r.generators)
    gens.push_back(Json{{"multidegree", to_json(delta)}, {"count", ps.size()}, {"generators", poly_list(ps)}});
  Json dims = Json::array();
  for (const auto& [delta, d] : r.invariant_dims)
    dims.push_back(Json{{"multidegree", to_json(delta)}, {"invariant_dim", d}});
  return Json{{"m", r.slots},
              {"max_degree", r.max_degree},
              {"total", r.total_count()},
              {"minimal", r.minimal},
              {"multidegree_irreducible", r.multidegree_irreducible},
              {"irreducibility_violations", r.irreducibility_violations},
              {"generators", std::move(gens)},
              {"invariant_dims", std::move(dims)}};
}

Json api_to_json(const ApiReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x{{"multidegree", to_json(e.multidegree)},
           {"invariant_dim", e.invariant_dim},
           {"trace_dim", e.trace_dim},
           {"included", e.included},
           {"equal", e.equal}};
    if (e.witness) x["witness"] = e.witness->to_string();
    entries.push_back(std::move(x));
  }
  Json out{{"m", r.slots},
           {"max_degree", r.max_degree},
           {"equal_everywhere", r.equal_everywhere()},
           {"included_everywhere", r.included_everywhere()},
           {"entries", std::move(entries)}};
  if (const ApiEntry* s = r.first_strict()) {
    out["first_strict"] = to_json(s->multidegree);
    if (s->witness) out["witness"] = s->witness->to_string();
  }
  return out;
}

Json form_verdict_to_json(const FormVerdict& v) {
  Json basis = Json::array();
  for (const auto& b : v.basis) basis.push_back(to_json(b));
  Json out{{"exists", v.exists}, {"subspace_dim", v.basis.size()}, {"basis", std::move(basis)},
           {"determinant", v.determinant.to_string()}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.search_exhausted) out["witness_search_exhausted"] = true;
  return out;
}

Json forms_to_json(const FormsReport& r) {
  return Json{{"symmetric_nondeg", form_verdict_to_json(r.symmetric)},
              {"skew_nondeg", form_verdict_to_json(r.skew)},
              {"symmetric_associative_nondeg", form_verdict_to_json(r.symmetric_associative)}};
}

Json outcome_to_json(const SolveOutcome& o) {
  if (!o.finite()) {
    Json out{{"status", "inconclusive"}, {"reason", o.reason}, {"basis", poly_list(o.basis)}};
    if (o.residual) out["residual"] = o.residual->to_string();
    return out;
  }
  Json mats = Json::array();
  for (const auto& m : o.matrices) mats.push_back(to_json(m));
  return Json{{"status", "finite"},
              {"order", o.matrices.size()},
              {"closed", o.closure.closed},
              {"abelian", o.closure.abelian},
              {"matrices", std::move(mats)},
              {"basis", poly_list(o.basis)}};
}

Json ideal_search_to_json(const Algebra& a, const IdealSearch& s) {
  Json out{{"simple", !a.is_zero_product() && !s.has_ideal()}, {"zero_product", a.is_zero_product()}};
  if (s.witness) out["witness"] = s.witness->to_string();
  if (s.certificate) out["certificate"] = s.certificate->to_string();
  return out;
}

}  // namespace alginv
