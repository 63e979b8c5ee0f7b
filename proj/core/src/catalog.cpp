#include "alginv/algebra/catalog.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "alginv/error.hpp"

namespace alginv {

namespace {

using Vec2 = std::vector<Poly>;
using P = const std::vector<Poly>&;

Vec2 v(Poly a, Poly b) { return {std::move(a), std::move(b)}; }

Algebra::Table table2(Vec2 m11, Vec2 m12, Vec2 m21, Vec2 m22) {
  return {{std::move(m11), std::move(m12)}, {std::move(m21), std::move(m22)}};
}

struct Family {
  CatalogEntry entry;
  std::function<Algebra::Table(P)> build;
};

const Poly one(1L);
const Poly zero;

const std::vector<Family>& families() {
  static const std::vector<Family> list = {
      {{"table1:A1", {"alpha"}, "A1(alpha)"},
       [](P p) { return table2(v(1, 1), v(0, p[0]), v(0, one - p[0]), v(0, 0)); }},
      {{"table1:A2", {}, "A2"}, [](P) { return table2(v(0, 1), v(0, 1), v(0, -1), v(0, 0)); }},
      {{"table1:A3", {}, "A3"}, [](P) { return table2(v(0, 1), v(0, 0), v(0, 0), v(0, 0)); }},
      {{"table1:A4", {"alpha"}, "A4(alpha), alpha in F>=0"},
       [](P p) { return table2(v(p[0], 1), v(1, p[0]), v(-1, 0), v(0, 0)); }},
      {{"table1:B1", {"alpha"}, "B1(alpha)"},
       [](P p) { return table2(v(0, 0), v(one - p[0], 1), v(p[0], -1), v(0, 0)); }},
      {{"table1:B2", {"alpha"}, "B2(alpha)"},
       [](P p) { return table2(v(0, 0), v(one - p[0], 0), v(p[0], 0), v(0, 0)); }},
      {{"table1:B3", {}, "B3"}, [](P) { return table2(v(0, 0), v(0, 1), v(0, -1), v(0, 0)); }},
      {{"table1:C", {"alpha", "beta"}, "C(alpha,beta), beta in F>=0"},
       [](P p) { return table2(v(0, 1), v(one - p[0], p[1]), v(p[0], -p[1]), v(0, 1)); }},
      {{"table1:D1", {"alpha", "beta"}, "D1(alpha,beta), (alpha,beta) in U"},
       [](P p) { return table2(v(1, 0), v(one - p[0], p[1]), v(p[0], -p[1]), v(0, 0)); }},
      {{"table1:D2", {"alpha", "beta"}, "D2(alpha,beta), alpha+beta != 1"},
       [](P p) { return table2(v(1, 0), v(0, p[0]), v(0, p[1]), v(0, 0)); }},
      {{"table1:D3", {"alpha", "beta"}, "D3(alpha,beta), alpha+beta != 1"},
       [](P p) { return table2(v(1, 0), v(1, p[0]), v(-1, p[1]), v(0, 0)); }},
      {{"table1:E1", {"alpha", "beta", "gamma", "delta"}, "E1(alpha,beta,gamma,delta), parameters in V"},
       [](P p) { return table2(v(1, 0), v(p[0], p[1]), v(p[2], p[3]), v(0, 1)); }},
      {{"table1:E2", {"alpha", "beta", "gamma"}, "E2(alpha,beta,gamma), beta+gamma != 1"},
       [](P p) { return table2(v(1, 0), v(one - p[0], p[1]), v(p[0], p[2]), v(0, 1)); }},
      {{"table1:E3", {"alpha", "beta", "gamma"}, "E3(alpha,beta,gamma), gamma numeric in F^x>1"},
       [](P p) {
         Rational g = p[2].constant_term();
         Rational inv = 1 / g;
         return table2(v(1, 0), v((one - p[0]) * g, p[1] * inv), v(p[0] * g, (one - p[1]) * inv), v(0, 1));
       }},
      {{"table1:E4", {}, "E4"}, [](P) { return table2(v(1, 0), v(1, 1), v(0, 0), v(0, 1)); }},
      {{"table1:E5", {"alpha"}, "E5(alpha)"},
       [](P p) { return table2(v(1, 0), v(one - p[0], p[0]), v(p[0], one - p[0]), v(0, 1)); }},
      {{"table1:N", {}, "N (zero product)"}, [](P) { return table2(v(0, 0), v(0, 0), v(0, 0), v(0, 0)); }},
  };
  return list;
}

std::string short_name(const std::string& tag) {
  auto colon = tag.find(':');
  return colon == std::string::npos ? tag : tag.substr(colon + 1);
}

std::optional<Rational> numeric(const Poly& p) {
  if (p.is_constant()) return p.constant_term();
  return std::nullopt;
}

void add_domain_advisories(Algebra& a, const std::string& tag, P p) {
  auto sum_is_one = [&](const Poly& x, const Poly& y) { return (x + y - one).is_zero(); };
  auto in_t = [&](const Poly& x, const Poly& y, const char* what) {
    auto s = numeric(x + y);
    if (sum_is_one(x, y))
      a.add_advisory(std::string(what) + " lies in T (sum equals 1): outside the catalogued domain");
    else if (!s)
      a.add_advisory(std::string(what) + " not in T is assumed");
  };
  if (tag == "table1:A4") a.add_advisory("alpha in F>=0 (orbit representative) is user-asserted");
  if (tag == "table1:C") a.add_advisory("beta in F>=0 (orbit representative) is user-asserted");
  if (tag == "table1:D1") a.add_advisory("(alpha,beta) in U (orbit representative) is user-asserted");
  if (tag == "table1:D2" || tag == "table1:D3") in_t(p[0], p[1], "(alpha,beta)");
  if (tag == "table1:E1") a.add_advisory("(alpha,beta,gamma,delta) in V is user-asserted");
  if (tag == "table1:E2") in_t(p[1], p[2], "(beta,gamma)");
  if (tag == "table1:E3" && p[2].constant_term() == 1)
    a.add_advisory("gamma = 1 lies outside F^x>1: outside the catalogued domain");
}

// Substitutes assigned values into each other until no assigned symbol remains.
std::map<std::string, Poly> resolve(const std::map<std::string, Poly>& values) {
  std::map<Var, Poly> assign;
  for (const auto& [k, val] : values) assign.emplace(Var::parameter(k), val);
  std::map<std::string, Poly> out = values;
  for (std::size_t round = 0; round <= values.size(); ++round) {
    bool changed = false;
    for (auto& [k, val] : out) {
      Poly next = substitute(val, assign);
      if (!(next == val)) {
        val = std::move(next);
        changed = true;
      }
    }
    if (!changed) return out;
    for (const auto& [k, val] : out) assign[Var::parameter(k)] = val;
  }
  throw InputError("cyclic parameter assignments");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& f : families()) out.push_back(f.entry);
    out.push_back({"mat:2", {}, "Mat(2), basis E_ii' at index (i-1)n+i'"});
    out.push_back({"mat:3", {}, "Mat(3), basis E_ii' at index (i-1)n+i'"});
    out.push_back({"oct", {}, "split octonions (split Cayley algebra)"});
    return out;
  }();
  return entries;
}

std::optional<std::string> canonical_tag(std::string_view name) {
  std::string s(name);
  if (s == "Mat(2)" || s == "mat2" || s == "M2") s = "mat:2";
  if (s == "Mat(3)" || s == "mat3" || s == "M3") s = "mat:3";
  if (s == "Oct" || s == "O" || s == "octonions") s = "oct";
  for (const auto& e : catalog_entries()) {
    if (e.tag == s) return e.tag;
    if (e.tag.rfind("table1:", 0) == 0 && short_name(e.tag) == s) return e.tag;
  }
  return std::nullopt;
}

Algebra matrix_algebra(int n) {
  if (n != 2 && n != 3) throw InputError("Mat(n) is built in only for n in {2,3}");
  auto d = static_cast<std::size_t>(n * n);
  auto idx = [n](int i, int i2) { return static_cast<std::size_t>((i - 1) * n + i2 - 1); };
  Algebra::Table t(d, std::vector<std::vector<Poly>>(d, std::vector<Poly>(d)));
  for (int i = 1; i <= n; ++i)
    for (int i2 = 1; i2 <= n; ++i2)
      for (int j = 1; j <= n; ++j)
        for (int j2 = 1; j2 <= n; ++j2)
          if (i2 == j) t[idx(i, i2)][idx(j, j2)][idx(i, j2)] = Poly(1L);
  return Algebra(n * n, {}, std::move(t), "mat:" + std::to_string(n));
}

Algebra split_octonions() {
  using V3 = std::array<Rational, 3>;
  struct Oct {
    Rational alpha;
    V3 u, v;
    Rational beta;
  };
  auto dot = [](const V3& a, const V3& b) -> Rational { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  auto cross = [](const V3& a, const V3& b) {
    return V3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto basis = [](int k) {
    Oct o{0, {0, 0, 0}, {0, 0, 0}, 0};
    if (k == 1) o.alpha = 1;
    if (k >= 2 && k <= 4) o.u[static_cast<std::size_t>(k - 2)] = 1;
    if (k >= 5 && k <= 7) o.v[static_cast<std::size_t>(k - 5)] = 1;
    if (k == 8) o.beta = 1;
    return o;
  };
  Algebra::Table t(8, std::vector<std::vector<Poly>>(8, std::vector<Poly>(8)));
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Oct a = basis(i), b = basis(j);
      V3 vv = cross(a.v, b.v), uu = cross(a.u, b.u);
      std::vector<Rational> c(8);
      c[0] = a.alpha * b.alpha + dot(a.u, b.v);
      for (std::size_t k = 0; k < 3; ++k) {
        c[1 + k] = a.alpha * b.u[k] + b.beta * a.u[k] - vv[k];
        c[4 + k] = b.alpha * a.v[k] + a.beta * b.v[k] + uu[k];
      }
      c[7] = a.beta * b.beta + dot(a.v, b.u);
      for (std::size_t l = 0; l < 8; ++l)
        t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)][l] = Poly(c[l]);
    }
  return Algebra(8, {}, std::move(t), "oct");
}

Algebra catalog(std::string_view name, const std::map<std::string, Poly>& values) {
  auto tag = canonical_tag(name);
  if (!tag) throw InputError("unknown catalog algebra '" + std::string(name) + "'");
  if (*tag == "mat:2" || *tag == "mat:3" || *tag == "oct") {
    if (!values.empty()) throw InputError("catalog algebra '" + *tag + "' takes no parameters");
    return *tag == "oct" ? split_octonions() : matrix_algebra((*tag)[4] - '0');
  }
  const Family* fam = nullptr;
  for (const auto& f : families())
    if (f.entry.tag == *tag) fam = &f;
  const auto& names = fam->entry.params;
  for (const auto& [k, val] : values)
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw InputError("'" + *tag + "' has no parameter '" + k + "'");
  auto resolved = resolve(values);

  std::vector<Poly> p;
  std::vector<std::string> params;
  std::string label = *tag;
  if (!names.empty()) label += "(";
  for (std::size_t k = 0; k < names.size(); ++k) {
    auto it = resolved.find(names[k]);
    if (it == resolved.end()) {
      p.push_back(Poly::parameter(names[k]));
      label += (k ? "," : "") + names[k];
    } else {
      p.push_back(it->second);
      label += (k ? "," : "") + names[k] + "=" + it->second.to_string();
    }
  }
  if (!names.empty()) label += ")";
  std::set<std::string> symbols;
  for (const auto& x : p)
    for (Var var : x.variables()) symbols.insert(var.name());
  // Keep the family's own order first, then foreign symbols alphabetically.
  for (const auto& nm : names)
    if (symbols.erase(nm)) params.push_back(nm);
  params.insert(params.end(), symbols.begin(), symbols.end());

  if (*tag == "table1:E3") {
    if (!p[2].is_constant()) throw InputError("E3 requires a numeric gamma (it appears in denominators)");
    if (p[2].constant_term() == 0) throw InputError("E3 requires gamma != 0");
  }
  Algebra a(2, params, fam->build(p), label);
  add_domain_advisories(a, *tag, p);
  return a;
}

Algebra catalog(std::string_view name, const std::map<std::string, Rational>& values) {
  std::map<std::string, Poly> polys;
  for (const auto& [k, val] : values) polys.emplace(k, Poly(val));
  return catalog(name, polys);
}

}  // namespace alginv
