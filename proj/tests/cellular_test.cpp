#include <gtest/gtest.h>

#include "hb/cell_data.hpp"

using namespace hb;

namespace {
RationalField circle_at(int c) {
  RationalField f;
  f.bind[Symbol::circle({})] = c;
  return f;
}
template <class F>
std::vector<std::string> apex_names(const CellDatum<F>& d) {
  std::vector<std::string> out;
  for (auto& g : apex_report(d))
    if (g.apex) out.push_back(g.name);
  return out;
}
}  // namespace

TEST(Cellular, BrauerAxioms) {
  auto d = brauer_cell_datum(BrauerAlgebra::classical(3), circle_at(5));
  EXPECT_TRUE(verify_cell_axioms(d).ok());
  EXPECT_GT(verify_cell_axioms(corrupt_datum(d)).violations.size(), 0u);
}

TEST(Cellular, BlobAxioms) {
  CycloParams p(1, {2});
  RationalField f;
  f.bind[Symbol::cyclo(1, 1)] = 1;
  f.bind[Symbol::cyclo(1, 2)] = 0;
  f.bind[Symbol::circle({})] = 2;
  f.bind[Symbol::circle({letter(1)})] = 1;
  auto d = blob_cell_datum(BlobAlgebra(2, p), f);
  EXPECT_TRUE(verify_cell_axioms(d).ok());
}

TEST(Cellular, BrauerGram) {
  auto zero = apex_report(brauer_cell_datum(BrauerAlgebra::classical(2), circle_at(0)));
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_EQ(zero[0].lambda, 0);
  EXPECT_EQ(zero[0].rank, 0u);
  EXPECT_FALSE(zero[0].apex);
  auto one = apex_report(brauer_cell_datum(BrauerAlgebra::classical(2), circle_at(1)));
  EXPECT_EQ(one[0].rank, 1u);
  EXPECT_TRUE(one[0].apex);
}

TEST(Cellular, BrauerSimples) {
  auto d = brauer_cell_datum(BrauerAlgebra::classical(4), circle_at(5));
  for (auto& g : apex_report(d))
    if (g.lambda == 2) EXPECT_EQ(g.simples, "2");
}

TEST(Cellular, TemperleyLiebApexes) {
  TLAlgebra A3{0, 3}, A2{0, 2};
  EXPECT_EQ(apex_names(tl_cell_datum(A3, 0, circle_at(0))), (std::vector<std::string>{"1", "3"}));
  EXPECT_EQ(apex_names(tl_cell_datum(A2, 0, circle_at(0))), (std::vector<std::string>{"2"}));
  EXPECT_EQ(apex_names(brauer_cell_datum(BrauerAlgebra::classical(3), circle_at(5))), (std::vector<std::string>{"1", "3"}));
}

TEST(Cellular, SplitAssembleBijection) {
  auto A = BrauerAlgebra::classical(3);
  for (auto& x : A.enumerate()) {
    auto p = split_diagram(x);
    EXPECT_EQ(assemble(p.D, p.b, p.U), x);
  }
}
