#include <gtest/gtest.h>

#include "hb/murphy.hpp"

using namespace hb;

TEST(Partitions, Enumeration) {
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(4).front(), (Partition{4}));
  EXPECT_EQ(partitions(4).back(), (Partition{1, 1, 1, 1}));
  EXPECT_TRUE(dominates({3, 1}, {2, 2}));
  EXPECT_FALSE(dominates({2, 2}, {3, 1}));
  EXPECT_FALSE(dominates({3, 3}, {4, 1, 1}));
  EXPECT_FALSE(dominates({4, 1, 1}, {3, 3}));
}

TEST(Partitions, StandardTableauxCounts) {
  EXPECT_EQ(standard_tableaux({2, 2}).size(), 2u);
  EXPECT_EQ(standard_tableaux({3, 1}).size(), 3u);
  EXPECT_EQ(standard_tableaux({3, 2, 1}).size(), 16u);
  std::size_t sq = 0;
  for (auto& p : partitions(5)) sq += standard_tableaux(p).size() * standard_tableaux(p).size();
  EXPECT_EQ(sq, 120u);
}

TEST(Partitions, Restricted) {
  EXPECT_TRUE(e_restricted({1, 1}, 2));
  EXPECT_FALSE(e_restricted({2}, 2));
  EXPECT_TRUE(e_restricted({2, 1}, 2));
  EXPECT_FALSE(e_restricted({3}, 3));
  EXPECT_TRUE(e_restricted({5}, 0));
}

TEST(Murphy, TableauPermutationsAreDistinguished) {
  for (auto& p : partitions(4))
    for (auto& t : standard_tableaux(p)) EXPECT_NO_THROW(tableau_perm(t, p));
  EXPECT_EQ(row_stabilizer({2, 1}).size(), 2u);
}

TEST(Murphy, RowSymmetrizerOnTwoStrands) {
  // x_(2) = 1 + q H1, and H1 x_(2) = q x_(2)
  PrimeField f;
  f.vals[Symbol::q()] = 2;
  auto A = std::make_shared<const CycloHecke<PrimeField>>(2, CycloParams(0, {}), f);
  auto d = murphy_cell_datum(A);
  EXPECT_EQ(d.lambda_names, (std::vector<std::string>{"(2)", "(1,1)"}));
  HeckeElem x = A->hecke.one();
  add_into(x, A->hecke.H(1), q_poly());
  auto hx = A->multiply(A->vec(A->hecke.H(1)), A->vec(x));
  auto qx = A->vec(x);
  for (auto& [c, a] : qx) a = f.mul(a, 2);
  EXPECT_EQ(hx, qx);
}

TEST(Murphy, GenericSemisimple) {
  auto A = std::make_shared<const CycloHecke<PrimeField>>(3, CycloParams(0, {}), PrimeField{1000003, {{Symbol::q(), 2}}});
  auto d = murphy_cell_datum(A);
  EXPECT_TRUE(verify_cell_axioms(d).ok());
  for (auto& g : apex_report(d)) {
    EXPECT_TRUE(g.apex) << g.name;
    EXPECT_EQ(g.rank, g.m) << g.name;
  }
}

TEST(Murphy, ApexesAtRootsOfUnity) {
  EXPECT_EQ(hecke_apexes(2, 2), (std::vector<Partition>{{1, 1}}));
  EXPECT_EQ(hecke_apexes(3, 2), (std::vector<Partition>{{2, 1}, {1, 1, 1}}));
  EXPECT_EQ(hecke_apexes(3, 3), (std::vector<Partition>{{2, 1}, {1, 1, 1}}));
  EXPECT_EQ(hecke_apexes(3, 0).size(), 3u);
  for (int e : {2, 3}) {
    std::vector<Partition> want;
    for (auto& p : partitions(4))
      if (e_restricted(p, e)) want.push_back(p);
    EXPECT_EQ(hecke_apexes(4, e), want) << "e=" << e;
  }
}

TEST(Murphy, NonCellularityForOneCore) {
  // The Murphy-type basis with bounded JM monomials is not closed under
  // left multiplication modulo more dominant cells once g = 1.
  PrimeField f;
  f.vals[Symbol::q()] = 2;
  f.vals[Symbol::cyclo(1, 1)] = 35;
  f.vals[Symbol::cyclo(1, 2)] = 42;
  auto A = std::make_shared<const CycloHecke<PrimeField>>(2, CycloParams(1, {2}), f);
  auto r = verify_cell_axioms(murphy_cell_datum(A));
  EXPECT_EQ(r.violations.size(), 10u);
}
