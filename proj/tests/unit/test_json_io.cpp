#include <gtest/gtest.h>

#include "alginv/algebra/catalog.hpp"
#include "alginv/error.hpp"
#include "alginv/group/group_catalog.hpp"
#include "alginv/io/json_io.hpp"
#include "support.hpp"

using namespace alginv;
using namespace alginv::testing;

TEST(JsonIo, CatalogAlgebrasRoundTrip) {
  for (const auto& e : catalog_entries()) {
    std::map<std::string, Poly> values;
    if (e.tag == "table1:E3") values["gamma"] = Poly(2);
    const Algebra a = catalog(e.tag, values);
    const Algebra b = algebra_from_json(algebra_to_json(a));
    EXPECT_EQ(a.dim(), b.dim()) << e.tag;
    EXPECT_EQ(a.params(), b.params()) << e.tag;
    EXPECT_EQ(a.table(), b.table()) << e.tag;
  }
}

TEST(JsonIo, AlgebraFromText) {
  const Algebra a = algebra_from_json(Json::parse(R"({"dim":2,"params":["alpha"],
      "table":[[["1","1"],["0","alpha"]],[["0","1-alpha"],[0,0]]]})"));
  EXPECT_EQ(a.table(), catalog("A1").table());
}

TEST(JsonIo, SchemaViolations) {
  const char* bad[] = {
      R"([])",
      R"({"table":[]})",
      R"({"dim":"2","table":[]})",
      R"({"dim":17,"table":[]})",
      R"({"dim":1,"table":[[[1],[2]]]})",
      R"({"dim":1,"table":[[[0.5]]]})",
      R"({"dim":1,"table":[[["beta"]]]})",
      R"({"dim":1,"params":["x1"],"table":[[["x1"]]]})",
      R"({"dim":1,"params":"alpha","table":[[[1]]]})",
  };
  for (const char* text : bad) EXPECT_THROW(algebra_from_json(Json::parse(text)), InputError) << text;
}

TEST(JsonIo, GroupsRoundTrip) {
  for (const auto& tag : builtin_group_tags()) {
    const GroupSpec g = builtin_group(tag);
    const GroupSpec h = group_from_json(group_to_json(g), g.dim());
    EXPECT_EQ(group_to_json(g), group_to_json(h)) << tag;
    EXPECT_EQ(g.is_finite(), h.is_finite()) << tag;
    if (g.is_finite()) EXPECT_EQ(g.finite_elements(), h.finite_elements()) << tag;
  }
}

TEST(JsonIo, GroupSchema) {
  const GroupSpec swap = group_from_json(Json::parse(R"({"type":"finite","matrices":[[[0,1],[1,0]]]})"));
  EXPECT_EQ(swap.finite_elements().size(), 2u);
  EXPECT_FALSE(swap.warnings().empty());
  const GroupSpec fam = group_from_json(Json::parse(
      R"({"type":"family","params":["a"],"matrix":[["a",0],[0,"a"]],"nonzero":["a"]})"));
  EXPECT_FALSE(fam.is_finite());
  EXPECT_THROW(group_from_json(Json::parse(R"({"type":"finite","matrices":[[[1,1],[1,1]]]})")), InputError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"type":"finite","matrices":[[[1,0],[0,1]]]})"), 3), InputError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"type":"cyclic"})")), InputError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"type":"finite","matrices":[]})")), InputError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"type":"finite","matrices":[[[1,0],[0]]]})")), InputError);
}

TEST(JsonIo, Serializers) {
  EXPECT_EQ(to_json(M2(1, Q(-1, 2), 0, 3)), Json::parse(R"([["1","-1/2"],["0","3"]])"));
  EXPECT_EQ(to_json(Multidegree{2, 0, 1}), Json::parse("[2,0,1]"));
  const Json o = outcome_to_json(automorphism_group_dim2(catalog("E4")));
  EXPECT_EQ(o["status"], "finite");
  EXPECT_EQ(o["order"], 1);
  const Json n = outcome_to_json(automorphism_group_dim2(catalog("N")));
  EXPECT_EQ(n["status"], "inconclusive");
  const Json s = ideal_search_to_json(catalog("A3"), one_dim_ideal_witness(catalog("A3")));
  EXPECT_FALSE(s["simple"].get<bool>());
  EXPECT_TRUE(s.contains("witness"));
}
