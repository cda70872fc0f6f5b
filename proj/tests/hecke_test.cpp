#include <gtest/gtest.h>

#include "hb/hecke.hpp"
#include "hb/io.hpp"

using namespace hb;

namespace {
HeckeElem plus(HeckeElem a, const HeckeElem& b, const ScalarPoly& c = ScalarPoly(1)) {
  add_into(a, b, c);
  return a;
}
}  // namespace

TEST(Hecke, QuadraticRelation) {
  HeckeAlgebra A(0, 2);
  EXPECT_EQ(A.multiply(A.H(1), A.H(1)), plus(A.one(), A.H(1), delta_poly()));
  EXPECT_EQ(hecke_str(A.multiply(A.H(1), A.H(1))), "(q - q^-1) * H1 + 1 * id");
  EXPECT_EQ(A.multiply(A.H(1), A.H_inverse(1)), A.one());
}

TEST(Hecke, BraidRelation) {
  HeckeAlgebra A(1, 3);
  auto l = A.multiply(A.multiply(A.H(1), A.H(2)), A.H(1));
  auto r = A.multiply(A.multiply(A.H(2), A.H(1)), A.H(2));
  EXPECT_EQ(l, r);
}

TEST(Hecke, PullRelations) {
  HeckeAlgebra A(2, 3);
  const ScalarPoly d = A.delta();
  for (int u = 1; u <= 2; ++u) {
    EXPECT_EQ(A.multiply(A.H(1), A.L(u, 2)), plus(A.multiply(A.L(u, 1), A.H(1)), A.L(u, 2), d));
    EXPECT_EQ(A.multiply(A.H(1), A.L(u, 1)), plus(A.multiply(A.L(u, 2), A.H(1)), A.L(u, 2), -d));
    EXPECT_EQ(A.multiply(A.H(2), A.L(u, 3, true)), plus(A.multiply(A.L(u, 2, true), A.H(2)), A.L(u, 2, true), -d));
    EXPECT_EQ(A.multiply(A.H(2), A.L(u, 2, true)), plus(A.multiply(A.L(u, 3, true), A.H(2)), A.L(u, 2, true), d));
  }
}

TEST(Hecke, JMElementsCommute) {
  HeckeAlgebra A(2, 3);
  // L_{u,i} commutes with L_{v,j} for j < i and v >= u
  EXPECT_EQ(A.multiply(A.L(1, 3), A.L(2, 1)), A.multiply(A.L(2, 1), A.L(1, 3)));
  EXPECT_EQ(A.multiply(A.L(1, 2), A.L(1, 1)), A.multiply(A.L(1, 1), A.L(1, 2)));
  EXPECT_EQ(A.multiply(A.L(2, 3, true), A.L(2, 2)), A.multiply(A.L(2, 2), A.L(2, 3, true)));
}

TEST(Hecke, SpecializesToGroupAlgebra) {
  HeckeAlgebra A(1, 2);
  auto x = A.multiply(A.H(1), A.H(1));
  auto at1 = hecke_at_q1(x, 1, 2);
  ASSERT_EQ(at1.size(), 1u);
  EXPECT_EQ(at1.begin()->second, 1);
}

TEST(Hecke, BoundQ) {
  HeckeAlgebra A(0, 2, {{Symbol::q(), 2}});
  EXPECT_EQ(hecke_str(A.multiply(A.H(1), A.H(1))), "3/2 * H1 + 1 * id");
}

TEST(Hecke, ParseRoundTrip) {
  HeckeAlgebra A(2, 3);
  auto x = parse_hecke("(q - q^-1) * L(1,2)^2 * H1 H2 + 3 * id - tau2^-1 [3,1,2]", A);
  EXPECT_EQ(parse_hecke(hecke_str(x), A), x);
  EXPECT_EQ(parse_hecke("H1 H1", A), parse_hecke("(q - q^-1) H1 + 1", A));
  EXPECT_THROW(parse_hecke("H3", A), ParseError);
  EXPECT_THROW(parse_hecke("H1 +", A), ParseError);
  EXPECT_THROW(parse_hecke("(H1 + 1)^-1", A), ParseError);
}

TEST(CycloHecke, DimensionAndCyclotomicRelation) {
  PrimeField f;
  f.vals[Symbol::q()] = 2;
  f.vals[Symbol::cyclo(1, 1)] = 35;
  f.vals[Symbol::cyclo(1, 2)] = 42;
  CycloHecke<PrimeField> A(2, CycloParams(1, {2}), f);
  EXPECT_EQ(A.basis().size(), 8u);  // 2^2 * 2!
  EXPECT_TRUE(A.spans());
  EXPECT_TRUE(A.basis_independent());
  // (L_1 - 35)(L_1 - 42) = 0
  auto L = A.vec(A.hecke.L(1, 1));
  auto one = A.vec(A.hecke.one());
  auto shift = [&](std::uint64_t b) {
    auto v = L;
    auto minus = f.neg(b);
    for (auto& [c, a] : one) v[c] = f.add(v.count(c) ? v[c] : 0, f.mul(a, minus));
    return v;
  };
  EXPECT_TRUE(A.reduce(A.multiply(shift(35), shift(42))).empty());
}
