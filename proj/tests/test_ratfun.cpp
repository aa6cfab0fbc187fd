#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "origamiq/errors.hpp"
#include "origamiq/ratfun.hpp"

using namespace origamiq;

TEST_CASE("polynomial basics") {
  PolyQ zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.to_string() == "0");
  CHECK_THROWS_AS(zero.leading(), Error);

  PolyQ trimmed(RatVec{1, 2, 0, 0});
  CHECK(trimmed.degree() == 1);

  CHECK(PolyQ::constant(5).degree() == 0);
  CHECK(PolyQ::power(3).to_string() == "q^3");
  CHECK(PolyQ::power(1, Rat(1, 2)).to_string() == "1/2*q");

  PolyQ p(RatVec{1, 1, 1});
  CHECK(p.to_string() == "1 + q + q^2");
  CHECK(p.eval(2) == Rat(7));
  CHECK(p.eval(Rat(1, 2)) == Rat(7, 4));
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(9) == 0);

  CHECK(p - p == PolyQ());
  CHECK(p * PolyQ() == PolyQ());
  CHECK((PolyQ(RatVec{1, 1}) * PolyQ(RatVec{1, -1})).to_string() == "1 - q^2");
}

TEST_CASE("euclidean division") {
  PolyQ a(RatVec{1, 2, 0, 1});  // 1 + 2q + q^3
  PolyQ b(RatVec{1, 0, 1});     // 1 + q^2
  auto [quot, rem] = PolyQ::divmod(a, b);
  CHECK(quot == PolyQ(RatVec{0, 1}));
  CHECK(rem == PolyQ(RatVec{1, 1}));
  CHECK(quot * b + rem == a);
  CHECK(rem.degree() < b.degree());

  auto [q0, r0] = PolyQ::divmod(b, a);
  CHECK(q0.is_zero());
  CHECK(r0 == b);

  CHECK_THROWS_AS(PolyQ::divmod(a, PolyQ()), DivisionByZero);
}

TEST_CASE("polynomial gcd") {
  PolyQ qm1(RatVec{-1, 1});
  CHECK(poly_gcd(PolyQ(RatVec{-1, 0, 1}), qm1) == qm1);  // gcd(q^2-1, q-1)
  CHECK(poly_gcd(PolyQ(), PolyQ()).is_zero());
  CHECK(poly_gcd(PolyQ(RatVec{0, 2}), PolyQ()) == PolyQ(RatVec{0, 1}));  // monic
  // Coprime inputs give a constant gcd.
  CHECK(poly_gcd(PolyQ(RatVec{1, 1}), PolyQ(RatVec{-1, 1})).degree() == 0);
}

TEST_CASE("laurent normalization and arithmetic") {
  LaurentQ l(PolyQ(RatVec{0, 0, 3}), -1);  // 3q^2 * q^-1 = 3q
  CHECK(l.shift == 1);
  CHECK(l.poly == PolyQ::constant(3));
  CHECK(l.to_string() == "3*q");

  LaurentQ inv2(PolyQ::constant(1), -2);
  CHECK(inv2.to_string() == "q^-2");
  CHECK(inv2.coeff(-2) == 1);
  CHECK(inv2.coeff(0) == 0);

  LaurentQ sum = inv2 + LaurentQ(PolyQ::constant(1), 1);
  CHECK(sum.to_string() == "q^-2 + q");
  CHECK(sum - sum == LaurentQ());
  CHECK((inv2 * LaurentQ(PolyQ::constant(2), 5)).to_string() == "2*q^3");

  LaurentQ zero;
  CHECK(zero.is_zero());
  CHECK((zero + inv2) == inv2);
  CHECK((zero * inv2).is_zero());
}

TEST_CASE("rational function normalization") {
  RationalFunctionQ r(PolyQ(RatVec{1, 0, -1}), PolyQ(RatVec{1, -1}));  // (1-q^2)/(1-q)
  CHECK(r.is_polynomial());
  CHECK(r.as_polynomial() == PolyQ(RatVec{1, 1}));

  RationalFunctionQ geom(PolyQ::constant(1), PolyQ(RatVec{1, -1}));
  CHECK(!geom.is_polynomial());
  CHECK_THROWS_AS(geom.as_polynomial(), Error);
  CHECK(geom.den().leading() == 1);  // monic after normalization

  // Scaling numerator and denominator together is invisible.
  CHECK(RationalFunctionQ(PolyQ::constant(2), PolyQ(RatVec{2, -2})) == geom);

  CHECK_THROWS_AS(RationalFunctionQ(PolyQ::constant(1), PolyQ()), DivisionByZero);

  RationalFunctionQ zero;
  CHECK(zero.is_zero());
  CHECK(zero + geom == geom);
  CHECK(geom - geom == RationalFunctionQ());
}

TEST_CASE("interval vertex sum collapses") {
  // 1/(1-q) + q^2 * (1/(1-q^-1)) = 1/(1-q) - q^3/(1-q) = 1 + q + q^2.
  RationalFunctionQ left(PolyQ::constant(1), PolyQ(RatVec{1, -1}));
  RationalFunctionQ right(-PolyQ::power(3), PolyQ(RatVec{1, -1}));
  RationalFunctionQ sum = left + right;
  CHECK(sum.is_polynomial());
  CHECK(sum.as_polynomial() == PolyQ(RatVec{1, 1, 1}));
  CHECK(sum.to_string() == "1 + q + q^2");
}

TEST_CASE("laurent round trip through rational functions") {
  LaurentQ l(PolyQ(RatVec{2, 0, 1}), -3);
  RationalFunctionQ r = RationalFunctionQ::from_laurent(l);
  CHECK(!r.is_polynomial());
  CHECK(r.num() == PolyQ(RatVec{2, 0, 1}));
  CHECK(r.den() == PolyQ::power(3));

  LaurentQ nonneg(PolyQ(RatVec{1, 1}), 2);
  CHECK(RationalFunctionQ::from_laurent(nonneg).as_polynomial() ==
        PolyQ(RatVec{0, 0, 1, 1}));
}
