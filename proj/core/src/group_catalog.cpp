#include "alginv/group/group_catalog.hpp"

#include "alginv/algebra/catalog.hpp"
#include "alginv/error.hpp"

namespace alginv {

namespace {

QMatrix q2(long a, long b, long c, long d) {
  QMatrix m(2, 2);
  m(0, 0) = a, m(0, 1) = b, m(1, 0) = c, m(1, 1) = d;
  return m;
}

PolyMatrix p2(Poly a, Poly b, Poly c, Poly d) {
  PolyMatrix m(2, 2);
  m(0, 0) = std::move(a), m(0, 1) = std::move(b), m(1, 0) = std::move(c), m(1, 1) = std::move(d);
  return m;
}

const Poly pa = Poly::parameter("a");
const Poly pb = Poly::parameter("b");
const Poly pc = Poly::parameter("c");
const Poly pd = Poly::parameter("d");

GroupSpec unipotent(const std::string& name) {
  return GroupSpec::family(2, {p2(1, 0, pa, 1), {"a"}, {}, {}}, name);
}

GroupSpec swap_group(const std::string& name) { return GroupSpec::finite(2, {q2(1, 0, 0, 1), q2(0, 1, 1, 0)}, name); }

GroupSpec reflection_group(const std::string& name) {
  return GroupSpec::finite(2, {q2(1, 0, 0, 1), q2(-1, 0, 0, 1)}, name);
}

enum class Truth { Yes, No, Unknown };

Truth equal(const Poly& x, const Poly& y) {
  Poly d = x - y;
  if (d.is_zero()) return Truth::Yes;
  if (d.is_constant()) return Truth::No;
  return Truth::Unknown;
}

Truth both(Truth a, Truth b) {
  if (a == Truth::No || b == Truth::No) return Truth::No;
  if (a == Truth::Yes && b == Truth::Yes) return Truth::Yes;
  return Truth::Unknown;
}

}  // namespace

std::vector<QMatrix> e1_s3_matrices() {
  return {q2(-1, 0, -1, 1), q2(-1, 1, -1, 0), q2(0, -1, 1, -1), q2(1, -1, 0, -1), q2(0, 1, 1, 0), q2(1, 0, 0, 1)};
}

const std::vector<std::string>& builtin_group_tags() {
  static const std::vector<std::string> tags = {
      "table1aut:A1", "table1aut:A2", "table1aut:A3", "table1aut:A4", "table1aut:B2",   "table1aut:B3",
      "table1aut:C",  "table1aut:D1", "table1aut:D2", "table1aut:E1", "table1aut:E1S3", "table1aut:E3",
      "table1aut:E5", "table1aut:N",  "trivial"};
  return tags;
}

GroupSpec builtin_group(std::string_view tag_in) {
  std::string tag(tag_in);
  if (tag.rfind("table1aut:", 0) != 0 && tag != "trivial") tag = "table1aut:" + tag;
  if (tag == "trivial") return GroupSpec::trivial(2);
  if (tag == "table1aut:A1" || tag == "table1aut:A2") return unipotent(tag);
  if (tag == "table1aut:A3") return GroupSpec::family(2, {p2(pb, 0, pa, pb * pb), {"a", "b"}, {pb}, {}}, tag);
  if (tag == "table1aut:A4" || tag == "table1aut:C") return reflection_group(tag);
  if (tag == "table1aut:B2") return GroupSpec::family(2, {p2(pb, 0, 0, 1), {"b"}, {pb}, {}}, tag);
  if (tag == "table1aut:B3") return GroupSpec::family(2, {p2(1, 0, pa, pb), {"a", "b"}, {pb}, {}}, tag);
  if (tag == "table1aut:D1") return GroupSpec::finite(2, {q2(1, 0, 0, 1), q2(1, 1, 0, -1)}, tag);
  if (tag == "table1aut:D2") return GroupSpec::family(2, {p2(1, 0, 0, pb), {"b"}, {pb}, {}}, tag);
  if (tag == "table1aut:E1" || tag == "table1aut:E3") return swap_group(tag);
  if (tag == "table1aut:E1S3") return GroupSpec::finite(2, e1_s3_matrices(), tag);
  if (tag == "table1aut:E5")
    return GroupSpec::family(2, {p2(pa, pc, Poly(1L) - pa, Poly(1L) - pc), {"a", "c"}, {}, {{pa, pc}}}, tag);
  if (tag == "table1aut:N")
    return GroupSpec::family(2, {p2(pa, pb, pc, pd), {"a", "b", "c", "d"}, {pa * pd - pb * pc}, {}}, tag);
  throw InputError("unknown built-in group '" + std::string(tag_in) + "'");
}

std::optional<GroupSpec> table1_automorphisms(std::string_view algebra_tag, const std::map<std::string, Poly>& values) {
  auto tag = canonical_tag(algebra_tag);
  if (!tag || tag->rfind("table1:", 0) != 0) throw InputError("no Table 1 automorphism data for '" + std::string(algebra_tag) + "'");
  auto val = [&](const std::string& name) {
    auto it = values.find(name);
    return it == values.end() ? Poly::parameter(name) : it->second;
  };
  const std::string fam = tag->substr(7);
  auto conditional = [&](Truth t, GroupSpec g) -> std::optional<GroupSpec> {
    if (t == Truth::Yes) return g;
    if (t == Truth::No) return GroupSpec::trivial(2);
    return std::nullopt;
  };
  if (fam == "A1" || fam == "A2" || fam == "A3" || fam == "B2" || fam == "B3" || fam == "D2" || fam == "E5" || fam == "N")
    return builtin_group("table1aut:" + fam);
  if (fam == "A4") return conditional(equal(val("alpha"), 0), builtin_group("table1aut:A4"));
  if (fam == "C") return conditional(equal(val("beta"), 0), builtin_group("table1aut:C"));
  if (fam == "D1")
    return conditional(equal(val("beta"), Poly(2L) * val("alpha") - Poly(1L)), builtin_group("table1aut:D1"));
  if (fam == "E1") {
    Truth sym = both(equal(val("alpha"), val("delta")), equal(val("gamma"), val("beta")));
    if (sym != Truth::Yes) return conditional(sym, swap_group("table1aut:E1"));
    Truth s3 = both(equal(val("alpha"), -1), equal(val("gamma"), -1));
    if (s3 == Truth::Yes) return builtin_group("table1aut:E1S3");
    GroupSpec g = builtin_group("table1aut:E1");
    if (s3 == Truth::Unknown) g.set_name("table1aut:E1 (assuming (alpha,gamma) != (-1,-1))");
    return g;
  }
  if (fam == "E3") {
    if (!values.count("gamma")) return std::nullopt;
    return conditional(both(equal(val("gamma"), -1), equal(val("alpha"), val("beta"))), builtin_group("table1aut:E3"));
  }
  return GroupSpec::trivial(2);
}

}  // namespace alginv
