#include <gtest/gtest.h>

#include "hb/brauer.hpp"
#include "hb/tl_blob.hpp"

using namespace hb;

TEST(Counting, BlobNumbers) {
  EXPECT_EQ(blob_number(0, {}), 1);
  EXPECT_EQ(blob_number(1, {4}), 4);
  EXPECT_EQ(blob_number(2, {2, 3}), 9);
  EXPECT_EQ(blob_number(3, {2, 2, 2}), 16);  // words in 3 distinct letters: 1 + 3 + 6 + 6
}

TEST(Counting, BlobDimensions) {
  EXPECT_EQ(blob_dim(0, {}, 4), 14);
  EXPECT_EQ(blob_dim(1, {2}, 3), 20);
  EXPECT_EQ(blob_dim(1, {3}, 2), 12);  // 3 * (3 + 1)
  EXPECT_EQ(enumerate_blob_basis(1, {3}, 2).size(), 12u);
}

TEST(Counting, BrauerDimensions) {
  EXPECT_EQ(brauer_dim(0, {}, 3), 15);
  EXPECT_EQ(brauer_dim(1, {2}, 2), 12);
  EXPECT_EQ(enumerate_clapped_basis(1, {2}, 2).size(), 12u);
}

TEST(TL, Relations) {
  TLAlgebra A{0, 3};
  auto e1 = basis_element(A.e(1)), e2 = basis_element(A.e(2));
  Element<TLDiagram> c_e1;
  add_term(c_e1, A.e(1), circle_poly({}));
  EXPECT_EQ(A.multiply(e1, e1), c_e1);
  EXPECT_EQ(A.multiply(A.multiply(e1, e2), e1), e1);
  EXPECT_EQ(A.enumerate(0).size(), 5u);
}

TEST(Blob, CyclotomicRelation) {
  // b^2 = (b1 + b2) b - b1 b2 on one strand
  CycloParams p(1, {2});
  BlobAlgebra A(1, p);
  auto b = A.normalize(A.blob(1));
  auto bb = A.multiply(b, b);
  Element<BlobDiagram> want;
  add_into(want, b, cyclo_poly(1, 1) + cyclo_poly(1, 2));
  add_term(want, A.identity(), -(cyclo_poly(1, 1) * cyclo_poly(1, 2)));
  EXPECT_EQ(bb, want);
  EXPECT_EQ(specialize(bb, {{Symbol::cyclo(1, 1), 1}, {Symbol::cyclo(1, 2), 0}}),
            specialize(b, {{Symbol::cyclo(1, 1), 1}, {Symbol::cyclo(1, 2), 0}}));
}

TEST(Blob, LoopAroundBlob) {
  CycloParams p(1, {2});
  BlobAlgebra A(2, p);
  auto e = basis_element(A.e(1));
  auto b = A.normalize(A.blob(1));
  auto r = A.multiply(A.multiply(e, b), e);
  Element<BlobDiagram> want;
  add_term(want, A.e(1), circle_poly({letter(1)}));
  EXPECT_EQ(r, want);
}

TEST(Brauer, Relations) {
  auto A = BrauerAlgebra::classical(3);
  auto s1 = basis_element(A.s(1)), s2 = basis_element(A.s(2)), e1 = basis_element(A.e(1));
  auto id = basis_element(BrauerDiagram::identity(3));
  EXPECT_EQ(A.multiply(s1, s1), id);
  EXPECT_EQ(A.multiply(A.multiply(s1, s2), s1), A.multiply(A.multiply(s2, s1), s2));
  EXPECT_EQ(A.multiply(e1, s1), e1);
  EXPECT_EQ(A.multiply(s1, e1), e1);
  Element<BrauerDiagram> c_e1;
  add_term(c_e1, A.e(1), circle_poly({}));
  EXPECT_EQ(A.multiply(e1, e1), c_e1);
  EXPECT_EQ(A.enumerate().size(), 15u);
}

TEST(Brauer, BlobsOnDifferentStrandsCommute) {
  BrauerAlgebra A(2, CycloParams(2, {2, 2}));
  auto x = basis_element(A.blob(1, 1)), y = basis_element(A.blob(2, 2));
  EXPECT_EQ(A.multiply(x, y), A.multiply(y, x));
}
