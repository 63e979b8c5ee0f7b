#include "alginv_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "alginv/algebra/catalog.hpp"
#include "alginv/audit/audit.hpp"
#include "alginv/error.hpp"
#include "alginv/group/group_catalog.hpp"
#include "alginv/traces/word.hpp"

#ifndef ALGINV_VERSION
#define ALGINV_VERSION "unknown"
#endif

namespace alginv::cli {

std::string_view version() { return ALGINV_VERSION; }

std::map<std::string, Rational> parse_params(std::string_view text) {
  std::map<std::string, Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw InputError("malformed parameter assignment \"" + std::string(item) + "\" (expected name=value)");
    const std::string name(item.substr(0, eq));
    if (!is_valid_parameter_name(name)) throw InputError("invalid parameter name \"" + name + "\"");
    if (out.count(name)) throw InputError("parameter \"" + name + "\" assigned twice");
    out[name] = parse_rational(item.substr(eq + 1));
    start = comma + 1;
  }
  return out;
}

Json config_to_json(const RunConfig& cfg) {
  Json j{{"command", cfg.command}};
  if (!cfg.action.empty()) j["action"] = cfg.action;
  if (!cfg.algebra.empty()) j["algebra"] = cfg.algebra;
  j["group"] = cfg.group;
  Json params = Json::object();
  for (const auto& [k, v] : parse_params(cfg.params)) params[k] = to_string(v);
  j["params"] = std::move(params);
  if (cfg.m) j["m"] = *cfg.m;
  if (cfg.max_degree) j["max_degree"] = *cfg.max_degree;
  if (!cfg.word.empty()) j["word"] = cfg.word;
  if (cfg.command == "verify-all") j["scope"] = cfg.scope;
  j["output"] = cfg.json ? "json" : "text";
  if (!cfg.out.empty()) j["out"] = cfg.out;
  return j;
}

namespace {

struct Loaded {
  Algebra algebra;
  std::optional<std::string> tag;  // set for catalog algebras
  std::map<std::string, Rational> values;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

Loaded load_algebra(const RunConfig& cfg) {
  if (cfg.algebra.empty()) throw InputError("--algebra is required");
  Loaded out;
  out.values = parse_params(cfg.params);
  if (auto tag = canonical_tag(cfg.algebra)) {
    out.tag = *tag;
    out.algebra = catalog(*tag, out.values);
    return out;
  }
  if (!std::filesystem::exists(cfg.algebra))
    throw InputError("unknown algebra \"" + cfg.algebra + "\" (neither a catalog tag nor a file)");
  Algebra a = algebra_from_json(read_json_file(cfg.algebra), cfg.algebra);
  for (const auto& [k, v] : out.values)
    if (std::find(a.params().begin(), a.params().end(), k) == a.params().end())
      throw InputError("parameter \"" + k + "\" is not declared by the algebra");
  if (!out.values.empty()) {
    std::string name = a.name();
    a = a.substitute_params(out.values);
    a.set_name(name);
  }
  out.algebra = std::move(a);
  return out;
}

GroupSpec load_group(const RunConfig& cfg, const Loaded& l) {
  const std::string& src = cfg.group;
  if (src.empty() || src == "auto") {
    if (!l.tag) throw InputError("--group auto needs a catalog algebra; pass a group file or tag");
    if (l.tag->rfind("table1:", 0) != 0) throw InputError("no automorphism data for " + *l.tag + "; pass --group");
    std::map<std::string, Poly> values;
    for (const auto& [k, v] : l.values) values[k] = Poly(v);
    auto g = table1_automorphisms(*l.tag, values);
    if (!g) throw InputError("the listed automorphism group depends on formal parameters; assign them with --param");
    return *g;
  }
  if (src == "trivial") return GroupSpec::trivial(l.algebra.dim());
  const auto& tags = builtin_group_tags();
  if (std::find(tags.begin(), tags.end(), src) != tags.end()) {
    GroupSpec g = builtin_group(src);
    if (g.dim() != l.algebra.dim()) throw InputError("group and algebra dimensions differ");
    return g;
  }
  if (!std::filesystem::exists(src)) throw InputError("unknown group \"" + src + "\" (neither a built-in tag nor a file)");
  return group_from_json(read_json_file(src), l.algebra.dim(), src);
}

int positive(const std::optional<int>& v, int fallback, const char* flag) {
  const int x = v.value_or(fallback);
  if (x < 1) throw InputError(std::string(flag) + " must be positive");
  return x;
}

Json algebra_header(const Loaded& l) {
  Json j{{"name", l.algebra.name()}, {"dim", l.algebra.dim()}, {"params", l.algebra.params()}};
  if (!l.algebra.advisories().empty()) j["advisories"] = l.algebra.advisories();
  return j;
}

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string matrix_text(const Json& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += (r ? ", [" : "[");
    for (std::size_t c = 0; c < m[r].size(); ++c) out += (c ? ", " : "") + str(m[r][c]);
    out += "]";
  }
  return out + "]";
}

// ------------------------------------------------------------------ commands

struct Outcome {
  Json result;
  int code = kSuccess;
};

Outcome cmd_catalog(const RunConfig& cfg) {
  if (!cfg.action.empty() && cfg.action != "list") throw InputError("unknown catalog action \"" + cfg.action + "\"");
  Json algs = Json::array();
  for (const auto& e : catalog_entries())
    algs.push_back(Json{{"tag", e.tag}, {"params", e.params}, {"description", e.description}});
  return {Json{{"algebras", std::move(algs)}, {"groups", builtin_group_tags()}}};
}

Outcome cmd_algebra(const RunConfig& cfg) {
  if (!cfg.action.empty() && cfg.action != "show") throw InputError("unknown algebra action \"" + cfg.action + "\"");
  const Loaded l = load_algebra(cfg);
  Json j = algebra_header(l);
  j["algebra"] = algebra_to_json(l.algebra);
  return {std::move(j)};
}

Outcome cmd_trace(const RunConfig& cfg) {
  const Loaded l = load_algebra(cfg);
  Json j = algebra_header(l);
  if (cfg.word.empty()) {
    j["table"] = trace_table_to_json(trace_table_report(l.algebra));
    return {std::move(j)};
  }
  const Word w = parse_word(cfg.word);
  const int m = positive(cfg.m, std::max(1, w.max_letter()), "--m");
  if (w.max_letter() > m) throw InputError("word uses a variable beyond --m");
  j["word"] = w.to_string();
  j["trace"] = trace_of_word(l.algebra, w, m).to_string();
  return {std::move(j)};
}

Outcome cmd_aut(const RunConfig& cfg) {
  const Loaded l = load_algebra(cfg);
  Json j = algebra_header(l);
  if (cfg.action == "verify") {
    const GroupSpec g = load_group(cfg, l);
    j["group"] = g.name();
    j["group_spec"] = group_to_json(g);
    j["is_automorphism"] = is_automorphism(l.algebra, g);
    return {std::move(j)};
  }
  if (cfg.action == "solve") {
    const SolveOutcome o = automorphism_group_dim2(l.algebra);
    j["outcome"] = outcome_to_json(o);
    return {std::move(j), o.finite() ? kSuccess : kInconclusive};
  }
  throw InputError("aut needs an action: verify or solve");
}

Outcome cmd_simple(const RunConfig& cfg) {
  const Loaded l = load_algebra(cfg);
  Json j = algebra_header(l);
  j["simple_report"] = ideal_search_to_json(l.algebra, one_dim_ideal_witness(l.algebra));
  return {std::move(j)};
}

Outcome cmd_invariants(const RunConfig& cfg) {
  if (!cfg.action.empty() && cfg.action != "gens") throw InputError("unknown invariants action \"" + cfg.action + "\"");
  const Loaded l = load_algebra(cfg);
  const GroupSpec g = load_group(cfg, l);
  const int m = positive(cfg.m, 2, "--m");
  const int D = positive(cfg.max_degree, default_degree_bound(g), "--max-degree");
  Json j = algebra_header(l);
  j["group"] = g.name();
  j["generators"] = generators_to_json(minimal_generators(g, m, D));
  return {std::move(j)};
}

Outcome cmd_api(const RunConfig& cfg) {
  const Loaded l = load_algebra(cfg);
  const GroupSpec g = load_group(cfg, l);
  const int m = positive(cfg.m, 2, "--m");
  const int D = positive(cfg.max_degree, 4, "--max-degree");
  Json j = algebra_header(l);
  j["group"] = g.name();
  j["api"] = api_to_json(api_check(l.algebra, g, m, D));
  j["generators"] = generators_to_json(minimal_generators(g, m, D));
  return {std::move(j)};
}

Outcome cmd_forms(const RunConfig& cfg) {
  const Loaded l = load_algebra(cfg);
  const GroupSpec g = load_group(cfg, l);
  Json j = algebra_header(l);
  j["group"] = g.name();
  j["forms"] = forms_to_json(classify_forms(l.algebra, g));
  return {std::move(j)};
}

Outcome cmd_verify_all(const RunConfig& cfg) {
  const auto scope = parse_audit_scope(cfg.scope);
  if (!scope) throw InputError("unknown scope \"" + cfg.scope + "\" (traces, aut, simple, gens, api, forms, all)");
  const AuditReport rep = verify_all(*scope);
  Json claims = Json::array();
  for (const auto& c : rep.claims) claims.push_back(Json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  Json j{{"scope", rep.scope}, {"claims", std::move(claims)}, {"total", rep.claims.size()}, {"failures", rep.failures()}};
  return {std::move(j), rep.all_pass() ? kSuccess : kInconclusive};
}

// ------------------------------------------------------------------ text rendering

void render_text(const std::string& command, const Json& r, std::ostream& os) {
  if (r.contains("name")) {
    os << "algebra " << str(r["name"]) << " (dim " << r["dim"].get<int>() << ")";
    if (!r["params"].empty()) os << ", formal parameters " << r["params"].dump();
    os << "\n";
    if (r.contains("advisories"))
      for (const auto& a : r["advisories"]) os << "note: " << str(a) << "\n";
  }
  if (r.contains("group") && r["group"].is_string()) os << "group " << str(r["group"]) << "\n";
  if (command == "catalog") {
    for (const auto& a : r["algebras"]) {
      os << str(a["tag"]);
      if (!a["params"].empty()) os << " " << a["params"].dump();
      os << "  " << str(a["description"]) << "\n";
    }
    os << "groups:";
    for (const auto& g : r["groups"]) os << " " << str(g);
    os << "\n";
  } else if (command == "algebra") {
    const Json& t = r["algebra"]["table"];
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t k = 0; k < t[i].size(); ++k) {
        os << "e" << i + 1 << "*e" << k + 1 << " =";
        bool any = false;
        for (std::size_t l = 0; l < t[i][k].size(); ++l)
          if (str(t[i][k][l]) != "0") {
            os << (any ? " + " : " ") << "(" << str(t[i][k][l]) << ")*e" << l + 1;
            any = true;
          }
        os << (any ? "" : " 0") << "\n";
      }
  } else if (command == "trace") {
    if (r.contains("trace")) {
      os << str(r["trace"]) << "\n";
    } else {
      for (const auto& e : r["table"]) os << str(e["shape"]) << " = " << str(e["trace"]) << "\n";
    }
  } else if (command == "aut") {
    if (r.contains("is_automorphism")) {
      os << (r["is_automorphism"].get<bool>() ? "every listed element is an automorphism"
                                              : "not an automorphism group")
         << "\n";
    } else {
      const Json& o = r["outcome"];
      if (str(o["status"]) == "finite") {
        os << o["matrices"].size() << " automorphisms (closed: " << (o["closed"].get<bool>() ? "yes" : "no")
           << ", abelian: " << (o["abelian"].get<bool>() ? "yes" : "no") << ")\n";
        for (const auto& m : o["matrices"]) os << "  " << matrix_text(m) << "\n";
      } else {
        os << "inconclusive: " << str(o["reason"]) << "\n";
        if (o.contains("residual")) os << "  residual " << str(o["residual"]) << "\n";
        os << "  Groebner basis:\n";
        for (const auto& b : o["basis"]) os << "    " << str(b) << "\n";
      }
    }
  } else if (command == "simple") {
    const Json& s = r["simple_report"];
    if (s["simple"].get<bool>())
      os << "simple\n";
    else if (s.contains("witness"))
      os << "not simple; witness " << str(s["witness"]) << "\n";
    else if (s.contains("certificate"))
      os << "not simple; one-dimensional ideals over the algebraic closure, x = t*e1+e2 with "
         << str(s["certificate"]) << " = 0\n";
    else
      os << "not simple\n";
  }
  if (r.contains("generators") && command != "api") {
    const Json& g = r["generators"];
    os << "minimal generating set for I_" << g["m"].get<int>() << " up to degree " << g["max_degree"].get<int>()
       << ": 1 and " << g["total"].get<std::size_t>() << " generators\n";
    for (const auto& e : g["generators"]) {
      os << "  " << Json(e["multidegree"]).dump() << ":";
      for (const auto& p : e["generators"]) os << " " << str(p) << ";";
      os << "\n";
    }
    os << "multidegree-irreducible: " << (g["multidegree_irreducible"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& v : g["irreducibility_violations"]) os << "  " << str(v) << "\n";
  }
  if (command == "api") {
    const Json& a = r["api"];
    for (const auto& e : a["entries"]) {
      os << "  " << Json(e["multidegree"]).dump() << ": invariants " << e["invariant_dim"].get<std::size_t>()
         << ", traces " << e["trace_dim"].get<std::size_t>() << (e["equal"].get<bool>() ? "  equal" : "  strict");
      if (e.contains("witness")) os << ", witness " << str(e["witness"]);
      os << "\n";
    }
    os << (a["equal_everywhere"].get<bool>() ? "equality holds up to degree " : "equality fails below degree ")
       << a["max_degree"].get<int>() << " (checked degree by degree)\n";
  } else if (command == "forms") {
    const Json& f = r["forms"];
    for (const char* k : {"symmetric_nondeg", "skew_nondeg", "symmetric_associative_nondeg"}) {
      const Json& v = f[k];
      os << k << ": " << (v["exists"].get<bool>() ? "yes" : "no");
      if (v.contains("witness")) os << ", witness " << matrix_text(v["witness"]);
      os << " (subspace dim " << v["subspace_dim"].get<std::size_t>() << ")\n";
    }
  } else if (command == "verify-all") {
    for (const auto& c : r["claims"])
      os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << str(c["id"]) << ": " << str(c["detail"]) << "\n";
    os << r["failures"].get<std::size_t>() << " of " << r["total"].get<std::size_t>() << " claims failed\n";
  }
}

Outcome dispatch(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "catalog") return cmd_catalog(cfg);
  if (c == "algebra") return cmd_algebra(cfg);
  if (c == "trace") return cmd_trace(cfg);
  if (c == "aut") return cmd_aut(cfg);
  if (c == "simple") return cmd_simple(cfg);
  if (c == "invariants") return cmd_invariants(cfg);
  if (c == "api") return cmd_api(cfg);
  if (c == "forms") return cmd_forms(cfg);
  if (c == "verify-all") return cmd_verify_all(cfg);
  throw InputError("unknown command \"" + c + "\"");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Outcome o;
  Json config;
  try {
    config = config_to_json(cfg);
    o = dispatch(cfg);
  } catch (const CapExceeded& e) {
    err << "alginv: cap exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "alginv: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "alginv: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  std::ostringstream text;
  if (cfg.json) {
    Json report{{"tool", "alginv"}, {"version", std::string(version())}, {"config", config}, {"result", o.result}};
    if (o.code == kInconclusive) report["status"] = "inconclusive";
    text << report.dump(2) << "\n";
  } else {
    render_text(cfg.command, o.result, text);
  }
  if (cfg.out.empty()) {
    out << text.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "alginv: cannot write " << cfg.out << "\n";
      return kInputError;
    }
    f << text.str();
  }
  return o.code;
}

}  // namespace alginv::cli
