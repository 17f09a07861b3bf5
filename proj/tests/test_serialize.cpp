#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tfl/serialize.hpp"

using namespace tfl;
using namespace tfl::testing;

TEST_CASE("field specs") {
  CHECK(field_from_json("gf:5") == FieldSpec::parse("gf:5"));
  CHECK(field_from_json("qq").kind == FieldSpec::Kind::rationals);
  CHECK(field_from_json(Json{{"kind", "gf"}, {"p", 7}}).p == 7u);
  CHECK(field_from_json(field_to_json(FieldSpec::parse("gf:101"))) == FieldSpec::parse("gf:101"));
  CHECK_THROWS(field_from_json("gf:4"));
  CHECK_THROWS(FieldSpec::parse("r"));
}

TEST_CASE("element encoding") {
  GF f(5);
  CHECK(element_to_json(f, f.from_int(3)) == "3");
  CHECK(element_from_json(f, Json("7")) == 2u);
  CHECK(element_from_json(f, Json(-1)) == 4u);
  QQ q;
  CHECK(element_to_json(q, q.parse("6/4")) == "3/2");
  CHECK(element_from_json(q, Json("-2/6")) == q.parse("-1/3"));
}

TEST_CASE_TEMPLATE("algebra round trips", F, GF, QQ) {
  F f;
  if constexpr (std::is_same_v<F, GF>) f = GF(7);
  for (auto name : builtin_algebra_names()) {
    CAPTURE(name);
    auto a = builtin_algebra(name, f);
    auto back = algebra_from_json(Json::parse(dump(algebra_to_json(a))), f);
    CHECK(back.table == a.table);
    CHECK(back.unit == a.unit);
    CHECK(back.idempotents == a.idempotents);
    auto flat = algebra_from_json(structure_constants_json(a), f);
    CHECK(flat.table == a.table);
    CHECK(flat.dim == a.dim);
    REQUIRE(flat.radical);
    CHECK(*flat.radical == *a.radical);
  }
}

TEST_CASE("quiver documents") {
  GF f(5);
  auto dual = Json::parse(R"({"kind":"quiver","vertices":1,"arrows":[[0,0,"a"]],"relations":["a*a"],"nilpotency":2})");
  auto a = algebra_from_json(dual, f);
  CHECK(a.dim == 2);
  CHECK(a.table == builtin_algebra("DUAL2", f).table);
  CHECK(algebra_from_json(Json{{"builtin", "A2"}}, f).dim == 3);
  CHECK_THROWS_AS(algebra_from_json(Json{{"builtin", "NOPE"}}, f), InputError);
  CHECK_THROWS_AS(algebra_from_json(Json{{"kind", "quiver"}}, f), InputError);
  auto wrong_field = dual;
  wrong_field["field"] = "gf:7";
  CHECK_THROWS_AS(algebra_from_json(wrong_field, f), InputError);
}

TEST_CASE("structure-constant documents are validated") {
  GF f(5);
  // k[x]/(x^2) with a broken product x * x = x; unit e0
  auto doc = Json::parse(R"({"kind":"structure_constants","dim":2,"unit":["1","0"],
    "table":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"],[1,1,1,"1"]]})");
  // x^2 = 1 + x is associative; breaking the unit row is not
  CHECK_NOTHROW(algebra_from_json(doc, f));
  doc["table"][1] = Json::array({0, 1, 0, "1"});
  try {
    algebra_from_json(doc, f);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("invalid algebra") != std::string::npos);
  }

  auto nonassoc = Json::parse(R"({"kind":"structure_constants","dim":3,"unit":["1","0","0"],
    "table":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],[2,0,2,"1"],[1,1,2,"1"],[1,2,2,"1"]]})");
  try {
    algebra_from_json(nonassoc, f);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(i,j,k,l)") != std::string::npos);
  }
}

TEST_CASE("module and sequence round trips") {
  auto r = ring("DUAL2", GF(5));
  auto s = simple(r);
  auto j = module_to_json(s);
  CHECK(j.at("side") == "left");
  CHECK(j.at("dim") == 1);
  CHECK(module_from_json(Json::parse(dump(j)), r) == s);

  auto right = simple(r, 0, Side::right);
  CHECK(module_from_json(module_to_json(right), r).side() == Side::right);

  auto seq = extension_from_cocycle(s, s, 0);
  auto back = sequence_from_json(Json::parse(dump(sequence_to_json(seq))), r);
  REQUIRE(back.objects.size() == seq.objects.size());
  for (std::size_t i = 0; i < seq.objects.size(); ++i) CHECK(back.objects[i] == seq.objects[i]);
  CHECK(back.certify().exact);

  auto qr = qring("A2");
  auto p = regular(qr);
  CHECK(module_from_json(module_to_json(p), qr) == p);
}

TEST_CASE("invalid module documents") {
  auto r = ring("DUAL2", GF(5));
  auto j = module_to_json(simple(r));
  auto short_list = j;
  short_list["action"].erase(1);
  CHECK_THROWS_AS(module_from_json(short_list, r), InputError);

  auto relation = j;
  relation["action"][1] = Json::array({Json::array({"1"})});  // a acting invertibly breaks a^2 = 0
  try {
    module_from_json(relation, r);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(i,j)") != std::string::npos);
  }

  auto side = j;
  side["side"] = "middle";
  CHECK_THROWS_AS(module_from_json(side, r), InputError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"dim":1})"), r), InputError);
}

TEST_CASE("documents on disk") {
  CHECK(load_document("builtin:NG3") == Json{{"builtin", "NG3"}});
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), InputError);
  auto path = std::string("/tmp/tfl_malformed_test.json");
  {
    std::ofstream out(path);
    out << "{\"kind\": ";
  }
  CHECK_THROWS_AS(load_document(path), InputError);
  std::remove(path.c_str());
}

TEST_CASE("result encodings") {
  CHECK(dim_result_to_json(DimResult::finite(2, true)).at("value") == 2);
  CHECK(dim_result_to_json(DimResult::infinite("x")).at("value") == "INFINITY");
  CHECK(dim_result_to_json(DimResult::greater_than(8)).at("value") == "GREATER_THAN(8)");
  TorsionfreeDimension t;
  t.bound = 8;
  t.note = "no syzygy bound found <= 8";
  auto tj = torsionfree_dimension_to_json(t);
  CHECK(tj.at("upper").is_null());
  CHECK(tj.at("value") == t.to_string());
  CHECK(dump(Json{{"b", 1}, {"a", 2}}) == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
}
