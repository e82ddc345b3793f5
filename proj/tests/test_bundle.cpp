#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/bundle.hpp"

using namespace homalg;

TEST_CASE("empty bundle document") {
  AlgebraBundle b = parse_bundle("{}");
  CHECK(b.field.is_rational());
  CHECK(b.algebras.empty());
  CHECK(b.operators.empty());
  CHECK(b.functionals.empty());
  CHECK(b.maps.empty());
}

TEST_CASE("H3 document with skew_complete is extended on load") {
  const char* doc = R"({
    "field": "Q",
    "algebras": [{
      "name": "H3", "dim": 3, "arity": 2,
      "twist": [["1","0","0"],["0","1","0"],["0","0","1"]],
      "bracket": [{"args": [1,2], "value": {"3": "1"}}],
      "skew_complete": true
    }]
  })";
  AlgebraBundle b = parse_bundle(doc);
  const HomAlgebra& h3 = b.algebra("H3");
  CHECK(h3.tensor().table().size() == 2);
  CHECK(h3.bracket2(h3.basis(2), h3.basis(1)) == vec_neg(h3.basis(3)));
}

TEST_CASE("serialize-parse round trip is byte exact on canonical files") {
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    std::string once = serialize_bundle(catalog_bundle(f));
    std::string twice = serialize_bundle(parse_bundle(once));
    CHECK(once == twice);
  }
}

TEST_CASE("rationals are canonicalized on load") {
  const char* doc = R"({
    "field": "Q",
    "maps": [{"name": "m", "matrix": [["2/4","-3/-6"],["0","1"]]}]
  })";
  AlgebraBundle b = parse_bundle(doc);
  CHECK(b.map("m").at(0, 0) == Scalar::fraction(1, 2));
  CHECK(b.map("m").at(0, 1) == Scalar::fraction(1, 2));
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_bundle(R"({"field": {"Fp": 6}})"), BundleError);
  CHECK_THROWS_AS(
      parse_bundle(R"({"maps": [{"name": "m", "matrix": [["1/0"]]}]})"), BundleError);
  CHECK_THROWS_AS(
      parse_bundle(R"({"maps": [{"name": "m", "matrix": [["1","2"],["3"]]}]})"), BundleError);
  CHECK_THROWS_AS(parse_bundle(R"({"maps": [{"name": "m", "matrix": [["1"]]},
                                            {"name": "m", "matrix": [["2"]]}]})"),
                  BundleError);
  // Bracket value index out of range.
  CHECK_THROWS_AS(parse_bundle(R"({"algebras": [{"name": "a", "dim": 2, "arity": 2,
    "twist": [["1","0"],["0","1"]],
    "bracket": [{"args": [1,2], "value": {"5": "1"}}]}]})"),
                  BundleError);
  // Syntax errors carry position info from the JSON parser.
  try {
    parse_bundle("{\"field\": }");
    FAIL("expected BundleError");
  } catch (const BundleError& e) {
    CHECK(std::string(e.what()).find("syntax error") != std::string::npos);
  }
}

TEST_CASE("operator kinds round trip") {
  const char* doc = R"({
    "field": {"Fp": 7},
    "operators": [
      {"name": "p", "matrix": [[1,2],[3,4]], "weight": 6, "kind": "rota-baxter"},
      {"name": "d", "matrix": [[0,1],[0,0]], "weight": 0, "kind": "derivation"},
      {"name": "ak", "matrix": [[1,0],[0,1]], "weight": 0, "kind": {"alpha-k": 2}}
    ]
  })";
  AlgebraBundle b = parse_bundle(doc);
  CHECK(b.op("p").kind == OperatorKind::RotaBaxter);
  CHECK(b.op("p").weight.residue() == 6);
  CHECK(b.op("d").kind == OperatorKind::Derivation);
  CHECK(b.op("ak").kind == OperatorKind::AlphaKDerivation);
  CHECK(b.op("ak").alpha_power == 2);
  std::string out = serialize_bundle(b);
  AlgebraBundle again = parse_bundle(out);
  CHECK(again.op("ak").alpha_power == 2);
  CHECK(serialize_bundle(again) == out);
}

TEST_CASE("name lookups throw on unknown entries") {
  AlgebraBundle b = catalog_bundle(FieldSpec::rationals());
  CHECK_THROWS_AS(b.algebra("nope"), BundleError);
  CHECK_THROWS_AS(b.op("nope"), BundleError);
  CHECK_THROWS_AS(b.functional("nope"), BundleError);
  CHECK_THROWS_AS(b.map("nope"), BundleError);
}

TEST_CASE("catalog over F_p reduces structure constants mod p") {
  AlgebraBundle b = catalog_bundle(FieldSpec::prime(2));
  const HomAlgebra& t4 = b.algebra("T4");
  // D = t^2 d/dt has the coefficient 2 = 0 mod 2.
  CHECK(b.op("t4_sq_ddt").matrix.at(3, 2).is_zero());
  CHECK(t4.field().p() == 2);
}
