#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "origamiq/template.hpp"
#include "support.hpp"

using namespace origamiq;
using testsupport::template_path;
using testsupport::unit_square;

namespace {

// Unit simplex and a sheared companion with the same y = 0 facet but
// different facet slopes at the shared vertices; glued along y = 0 they fail
// the local agreement check while every structural test passes.
OrigamiTemplate mismatched_slopes_template() {
  SignedPolytope a;
  a.name = "left";
  a.sign = +1;
  a.dimension = 2;
  a.halfspaces = {Halfspace({1, 0}, 0), Halfspace({0, 1}, 0), Halfspace({-1, -1}, 1)};
  SignedPolytope b;
  b.name = "right";
  b.sign = -1;
  b.dimension = 2;
  // conv{(0,0), (1,0), (1/2,1)}
  b.halfspaces = {Halfspace({0, 1}, 0), Halfspace({2, -1}, 0), Halfspace({-2, -1}, 2)};
  FoldSpec fold;
  fold.a = FoldSide{"left", 1};
  fold.b = FoldSide{"right", 0};
  return OrigamiTemplate(2, {a, b}, {fold});
}

}  // namespace

TEST_CASE("parsing the sphere template file") {
  OrigamiTemplate t = load_template(template_path("s4.json"));
  CHECK(t.dimension() == 2);
  REQUIRE(t.polytopes().size() == 2);
  CHECK(t.polytopes()[0].name == "plus");
  CHECK(t.polytopes()[0].sign == +1);
  CHECK(t.polytopes()[1].name == "minus");
  CHECK(t.polytopes()[1].sign == -1);
  REQUIRE(t.folds().size() == 1);
  CHECK(t.folds()[0].a == FoldSide{"plus", 2});
  CHECK(t.folds()[0].b == FoldSide{"minus", 2});
  CHECK(t.polytopes()[0].halfspaces[2].offset == Rat(1, 2));
  CHECK(t.index_of("minus") == 1);
  CHECK_THROWS_AS(t.index_of("Q"), UnknownPolytopeName);
}

TEST_CASE("parse error taxonomy") {
  CHECK_THROWS_AS(parse_template("not json"), SyntaxError);
  CHECK_THROWS_AS(parse_template("[]"), SyntaxError);
  CHECK_THROWS_AS(parse_template(R"({"dimension": 2, "polytopes": []})"), SyntaxError);
  CHECK_THROWS_AS(parse_template(R"({"polytopes": []})"), SyntaxError);
  CHECK_THROWS_AS(parse_template(R"({"dimension": 0, "polytopes": []})"), SyntaxError);

  const std::string poly_prefix =
      R"({"dimension": 1, "polytopes": [{"name": "p", "sign": "+", "halfspaces": )";
  // A float offset is rejected as a malformed rational, not as generic syntax.
  CHECK_THROWS_AS(
      parse_template(poly_prefix + R"([{"normal": [1], "offset": 0.5}]}]})"),
      MalformedRational);
  CHECK_THROWS_AS(
      parse_template(poly_prefix + R"([{"normal": [1], "offset": "1/0"}]}]})"),
      MalformedRational);
  CHECK_THROWS_AS(parse_template(poly_prefix + R"([{"normal": [1]}]}]})"), SyntaxError);
  CHECK_THROWS_AS(
      parse_template(poly_prefix + R"([{"normal": [1, 0], "offset": "0"}]}]})"),
      DimensionMismatch);
  CHECK_THROWS_AS(
      parse_template(poly_prefix + R"([{"normal": [1], "offset": "0"}]}],
                      "folds": [{"a": ["p", 0], "b": ["Q", 0]}]})"),
      UnknownPolytopeName);
  // String offsets "p" and "p/q" are both accepted.
  OrigamiTemplate ok = parse_template(
      poly_prefix + R"([{"normal": [1], "offset": 2}, {"normal": [-1], "offset": "7/2"}]}]})");
  CHECK(ok.polytopes()[0].halfspaces[1].offset == Rat(7, 2));
}

TEST_CASE("structural template rules") {
  SignedPolytope p;
  p.name = "p";
  p.sign = +1;
  p.dimension = 2;
  p.halfspaces = {Halfspace({1, 0}, 0), Halfspace({0, 1}, 0), Halfspace({-1, -1}, 1)};

  CHECK_THROWS_AS(OrigamiTemplate(2, {}, {}), SyntaxError);
  CHECK_THROWS_AS(OrigamiTemplate(2, {p, p}, {}), SyntaxError);  // duplicate name

  SignedPolytope bad_sign = p;
  bad_sign.sign = 3;
  CHECK_THROWS_AS(OrigamiTemplate(2, {bad_sign}, {}), SyntaxError);

  FoldSpec out_of_range;
  out_of_range.a = FoldSide{"p", 7};
  out_of_range.b = FoldSide{"p", 0};
  CHECK_THROWS_AS(OrigamiTemplate(2, {p}, {out_of_range}), SyntaxError);

  FoldSpec self_fold;
  self_fold.a = FoldSide{"p", 0};
  self_fold.b = FoldSide{"p", 0};
  CHECK_THROWS_AS(OrigamiTemplate(2, {p}, {self_fold}), SyntaxError);
}

TEST_CASE("render round trip") {
  OrigamiTemplate t = load_template(template_path("s4.json"));
  std::string first = render_template(t);
  OrigamiTemplate back = parse_template(first);
  CHECK(render_template(back) == first);
  CHECK(back.dimension() == t.dimension());
  REQUIRE(back.polytopes().size() == t.polytopes().size());
  for (std::size_t i = 0; i < back.polytopes().size(); ++i) {
    CHECK(back.polytopes()[i].name == t.polytopes()[i].name);
    CHECK(back.polytopes()[i].sign == t.polytopes()[i].sign);
    CHECK(back.polytopes()[i].halfspaces == t.polytopes()[i].halfspaces);
  }
  CHECK(back.folds() == t.folds());
}

TEST_CASE("validation accepts the sphere template") {
  ValidationReport rep = validate_template(load_template(template_path("s4.json")));
  CHECK(rep.accepted);
  CHECK(rep.errors.empty());
  CHECK(rep.fold_graph_connected);
  REQUIRE(rep.folds.size() == 1);
  CHECK(rep.folds[0].ok());
  CHECK(rep.folds[0].same_side);  // the file stores both copies on one side
  for (const PolytopeCheck& pc : rep.polytopes) {
    CHECK(pc.built);
    CHECK(pc.delzant);
  }
}

TEST_CASE("validation rejects equal signs across a fold") {
  ValidationReport rep = validate_template(load_template(template_path("bad_sign.json")));
  CHECK(!rep.accepted);
  REQUIRE(rep.folds.size() == 1);
  CHECK(!rep.folds[0].signs_opposite);
  bool mentioned = false;
  for (const std::string& e : rep.errors)
    if (e.find("same sign") != std::string::npos) mentioned = true;
  CHECK(mentioned);
}

TEST_CASE("validation rejects mismatched slopes at the fold") {
  ValidationReport rep = validate_template(mismatched_slopes_template());
  CHECK(!rep.accepted);
  REQUIRE(rep.folds.size() == 1);
  CHECK(rep.folds[0].hyperplanes_match);
  CHECK(rep.folds[0].facets_equal);
  CHECK(!rep.folds[0].local_agreement);
  CHECK(rep.folds[0].signs_opposite);
  CHECK_THROWS_AS(build_template(mismatched_slopes_template()), InvalidTemplate);
}

TEST_CASE("validation rejects a disconnected fold graph") {
  SignedPolytope a;
  a.name = "a";
  a.sign = +1;
  a.dimension = 2;
  a.halfspaces = unit_square().halfspaces();
  SignedPolytope b = a;
  b.name = "b";
  ValidationReport rep = validate_template(OrigamiTemplate(2, {a, b}, {}));
  CHECK(!rep.accepted);
  CHECK(!rep.fold_graph_connected);
  // Identical same-sign polytopes additionally trigger the overlap warning.
  CHECK(!rep.warnings.empty());
}

TEST_CASE("generators validate") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      OrigamiTemplate t = gen_sphere_template(n, k);
      CHECK(validate_template(t).accepted);
      BuiltTemplate bt = build_template(t);
      CHECK(bt.signs == std::vector<int>{+1, -1});
      CHECK(bt.polytopes[0] == bt.polytopes[1]);
    }

  DelzantPolytope prod = gen_product(gen_simplex(1, 1), gen_simplex(1, 1));
  CHECK(prod.f_vector() == std::vector<long>{4, 4, 1});
  CHECK(prod.vertices() == unit_square().vertices());
  CHECK(prod.delzant_report().accepted);

  for (int a = 0; a <= 3; ++a) CHECK(gen_hirzebruch(a, 2, 1).delzant_report().accepted);

  CHECK(validate_template(gen_double_template(unit_square(), 0)).accepted);
  CHECK(validate_template(gen_single_template(unit_square())).accepted);
}

TEST_CASE("relabeling leaves validation unchanged") {
  OrigamiTemplate t = load_template(template_path("s4.json"));
  std::vector<SignedPolytope> polys = t.polytopes();
  polys[0].name = "north";
  polys[1].name = "south";
  std::vector<FoldSpec> folds = t.folds();
  folds[0].a.polytope = "north";
  folds[0].b.polytope = "south";
  OrigamiTemplate renamed(t.dimension(), polys, folds);
  ValidationReport rep = validate_template(renamed);
  CHECK(rep.accepted);
  BuiltTemplate bt = build_template(renamed);
  CHECK(bt.index_of("south") == 1);
  CHECK_THROWS_AS(bt.index_of("plus"), UnknownPolytopeName);
}
