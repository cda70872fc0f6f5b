#include <gtest/gtest.h>

#include "hb/tl_blob.hpp"

using namespace hb;

namespace {
TLDiagram cupcap(int n, int i) {
  TLDiagram d(n, n);
  for (int k = 0; k < n; ++k)
    if (k != i - 1 && k != i) d.join(k, n + k);
  d.join(i - 1, i);
  d.join(n + i - 1, n + i);
  return d;
}
}  // namespace

TEST(Diagram, IdentityIsNeutral) {
  auto e = cupcap(3, 1);
  auto id = TLDiagram::identity(3);
  EXPECT_EQ(compose(id, e).diagram, e);
  EXPECT_EQ(compose(e, id).diagram, e);
  EXPECT_TRUE(compose(e, id).loops.empty());
}

TEST(Diagram, CupCapMakesOneLoop) {
  auto e = cupcap(2, 1);
  auto r = compose(e, e);
  EXPECT_EQ(r.diagram, e);
  ASSERT_EQ(r.loops.size(), 1u);
  EXPECT_TRUE(r.loops[0].is_one());
}

TEST(Diagram, StraighteningRelation) {
  auto e1 = cupcap(3, 1), e2 = cupcap(3, 2);
  auto r = compose(compose(e1, e2).diagram, e1);
  EXPECT_EQ(r.diagram, e1);
  EXPECT_TRUE(r.loops.empty());
}

TEST(Diagram, DecoratedLoopWord) {
  TLAlgebra A{1, 2};
  auto e = A.e(1);
  auto t = A.coil(1);
  // e tau e: the cap-cup loop picks up one winding around the core
  auto r = A.multiply(A.multiply(basis_element(e), basis_element(t)), basis_element(e));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.begin()->second, circle_poly({letter(1)}));
}

TEST(Diagram, StarIsInvolution) {
  TLAlgebra A{2, 3};
  for (auto& d : A.enumerate(1)) EXPECT_EQ(d.star().star(), d);
}
