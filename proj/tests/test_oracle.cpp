#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "origamiq/oracle.hpp"
#include "support.hpp"

using namespace origamiq;
using testsupport::unit_square;

namespace {

std::size_t vertex_index(const DelzantPolytope& p, const RatVec& v) {
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (p.vertices()[i] == v) return i;
  REQUIRE(false);
  return 0;
}

RationalFunctionQ one_over_one_minus_q() {
  return RationalFunctionQ(PolyQ::constant(1), PolyQ(RatVec{1, -1}));
}

}  // namespace

TEST_CASE("generic direction search") {
  CHECK(find_generic_direction(gen_simplex(2, 1)) == IntVec{1, 2});
  CHECK(find_generic_direction(gen_simplex(1, 1)) == IntVec{1});
  CHECK(find_generic_direction(unit_square()) == IntVec{1, 2});
  CHECK(find_generic_direction(build_template(gen_sphere_template(2, 1))) == IntVec{1, 2});

  BuiltTemplate simplex = build_template(gen_single_template(gen_simplex(2, 1)));
  CHECK(!direction_is_generic(simplex, {1, 1}));  // hypotenuse edge (1,-1)
  CHECK(!direction_is_generic(simplex, {1, 0}));  // vertical edges
  CHECK(direction_is_generic(simplex, {1, 2}));
  CHECK(direction_is_generic(simplex, {-1, 1}));  // genericity needs no positivity
  CHECK(!direction_is_generic(simplex, {1}));     // wrong length
}

TEST_CASE("require_generic names the obstruction") {
  BuiltTemplate simplex = build_template(gen_single_template(gen_simplex(2, 1)));
  CHECK_NOTHROW(require_generic(simplex, {1, 2}));
  CHECK_THROWS_AS(require_generic(simplex, {1, 1}), NonGenericDirection);
  try {
    require_generic(simplex, {1, 1});
    CHECK(false);
  } catch (const NonGenericDirection& e) {
    CHECK((e.edge == IntVec{1, -1} || e.edge == IntVec{-1, 1}));
  }

  // On the square, (1,1) pairs nonzero with every edge but fails to separate
  // the vertices (0,1) and (1,0).
  BuiltTemplate square = build_template(gen_single_template(unit_square()));
  try {
    require_generic(square, {1, 1});
    CHECK(false);
  } catch (const NonGenericDirection& e) {
    CHECK(e.edge.empty());
    CHECK(std::string(e.what()).find("separate") != std::string::npos);
  }

  CHECK_THROWS_AS(require_generic(simplex, {1}), DimensionMismatch);
}

TEST_CASE("vertex cone terms") {
  DelzantPolytope seg = gen_simplex(1, 2);  // [0, 2]
  CHECK(brion_vertex_term(seg, vertex_index(seg, {Rat(0)}), {1}) == one_over_one_minus_q());
  CHECK(brion_vertex_term(seg, vertex_index(seg, {Rat(2)}), {1}) ==
        RationalFunctionQ(-PolyQ::power(3), PolyQ(RatVec{1, -1})));

  DelzantPolytope simplex = gen_simplex(2, 1);
  RationalFunctionQ corner =
      brion_vertex_term(simplex, vertex_index(simplex, {Rat(0), Rat(0)}), {1, 2});
  CHECK(corner ==
        RationalFunctionQ(PolyQ::constant(1), PolyQ(RatVec{1, -1}) * PolyQ(RatVec{1, 0, -1})));

  // A zero-dimensional cone contributes the bare apex power.
  CHECK(brion_cone_term({5}, {}, {3}) == RationalFunctionQ::from_poly(PolyQ::power(15)));
  CHECK(brion_cone_term({-2}, {}, {3}) ==
        RationalFunctionQ::from_laurent(LaurentQ(PolyQ::constant(1), -6)));

  CHECK_THROWS_AS(brion_cone_term({0, 0}, {{1, -1}}, {1, 1}), NonGenericDirection);
  DelzantPolytope half = gen_simplex(2, Rat(1, 2));
  CHECK_THROWS_AS(brion_vertex_term(half, vertex_index(half, {Rat(1, 2), Rat(0)}), {1, 2}),
                  NonIntegralVertex);
}

TEST_CASE("fixed point sums collapse") {
  LaurentQ geom3(PolyQ(RatVec{1, 1, 1}), 0);
  CHECK(fixed_point_character(gen_simplex(1, 2), {1}) == geom3);
  CHECK(fixed_point_character(gen_simplex(2, 1), {1, 2}) == geom3);
  CHECK(fixed_point_character(unit_square(), {1, 2}) == LaurentQ(PolyQ(RatVec{1, 1, 1, 1}), 0));
}

TEST_CASE("oracle check on templates") {
  OracleReport square = oracle_check_template(gen_single_template(unit_square()));
  CHECK(square.pass);
  CHECK(square.integral_mode);
  CHECK(square.direction == IntVec{1, 2});
  CHECK(square.fixed_point_sum == LaurentQ(PolyQ(RatVec{1, 1, 1, 1}), 0));
  CHECK(square.fixed_point_sum == square.lattice_sum);

  OracleReport sphere = oracle_check_template(gen_sphere_template(2, 2), {1, 2});
  CHECK(sphere.pass);
  CHECK(sphere.integral_mode);
  CHECK(sphere.fixed_point_sum.is_zero());
  CHECK(sphere.lattice_sum.is_zero());

  // Half-integral vertices force the enumeration-only fallback.
  OracleReport folded = oracle_check_template(gen_sphere_template(2, 1));
  CHECK(folded.pass);
  CHECK(!folded.integral_mode);
  CHECK(folded.lattice_sum.is_zero());
  CHECK(folded.detail.find("non-integral") != std::string::npos);

  CHECK_THROWS_AS(oracle_check_template(gen_single_template(unit_square()), {1, 1}),
                  NonGenericDirection);
}

TEST_CASE("dimension is direction independent") {
  // All three directions are generic for all three polytopes; (1,2) would
  // pair to zero with the slant edge (-2,1) of the twisted trapezoid.
  std::vector<IntVec> dirs = {{2, 1}, {1, 3}, {3, 1}};
  for (const DelzantPolytope& p :
       {gen_simplex(2, 3), unit_square(), gen_hirzebruch(2, 2, 1)}) {
    Rat count = -1;
    for (const IntVec& a : dirs) {
      LaurentQ sum = fixed_point_character(p, a);
      Rat here = sum.poly.eval(1);  // total lattice count, shift-independent
      if (count < 0)
        count = here;
      else
        CHECK(count == here);
    }
    CHECK(count == Rat(danilov_polytope(p).dimension()));
  }
}
