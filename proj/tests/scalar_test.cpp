#include <gtest/gtest.h>

#include "hb/field.hpp"
#include "hb/freegroup.hpp"
#include "hb/scalar.hpp"

using namespace hb;

TEST(Scalar, RenderParseRoundTrip) {
  ScalarPoly x = (q_poly() - q_poly(-1)) * circle_poly({2, 5}) + ScalarPoly(Rational(3, 2)) * cyclo_poly(1, 2).pow(2);
  EXPECT_EQ(parse_scalar(x.str()), x);
  EXPECT_EQ(parse_scalar("0"), ScalarPoly(0));
}

TEST(Scalar, DeltaSquared) {
  // (q - q^-1)^2 = q^2 - 2 + q^-2
  ScalarPoly d = delta_poly();
  EXPECT_EQ(d * d, q_poly(2) - ScalarPoly(2) + q_poly(-2));
}

TEST(Scalar, Symbols) {
  EXPECT_EQ(parse_symbol("c[e]"), Symbol::circle({}));
  EXPECT_EQ(parse_symbol("b[2,1]"), Symbol::cyclo(2, 1));
  EXPECT_EQ(Symbol::circle({letter(1), letter(2, true)}).str(), "c[u1U2]");
}

TEST(Scalar, SpecializeAndFields) {
  ScalarPoly x = circle_poly({}) * circle_poly({}) + q_poly();
  RationalField f;
  f.bind[Symbol::circle({})] = 3;
  EXPECT_THROW(f.from(x), UnboundSymbol);
  f.bind[Symbol::q()] = Rational(1, 2);
  EXPECT_EQ(f.from(x), Rational(19, 2));
  PrimeField p;
  p.p = 7;
  p.vals[Symbol::q()] = 3;
  EXPECT_EQ(p.from(q_poly(-1)), 5u);
}

TEST(FreeGroup, ConjugacyKeys) {
  FreeWord u = FreeWord::gen(1), v = FreeWord::gen(2), U = FreeWord::gen(1, true);
  EXPECT_EQ(conj_key(u * v).w, conj_key(v * u).w);
  EXPECT_EQ(conj_key(u * u * v).w, conj_key(u * v * u).w);
  EXPECT_EQ(conj_key(u * v * U).w, conj_key(v).w);
  EXPECT_TRUE((u * U).is_one());
}
