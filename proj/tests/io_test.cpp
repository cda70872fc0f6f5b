#include <gtest/gtest.h>

#include "hb/brauer.hpp"
#include "hb/io.hpp"

using namespace hb;

TEST(Io, DiagramJsonRoundTrip) {
  BrauerAlgebra A(3, CycloParams(2, {2, 2}));
  for (auto& d : A.enumerate()) EXPECT_EQ(diagram_from_json<MonoidWord>(nlohmann::json::parse(diagram_json(d).dump())), d);
}

TEST(Io, DecoratedTlJson) {
  TLAlgebra A{2, 2};
  for (auto& d : A.enumerate(2)) EXPECT_EQ(diagram_from_json<FreeWord>(nlohmann::json::parse(diagram_json(d).dump())), d);
}

TEST(Io, ElementRoundTrip) {
  TLAlgebra A{1, 3};
  auto e = basis_element(A.e(1));
  auto x = A.multiply(A.multiply(e, basis_element(A.coil(1))), e);
  add_term(x, A.e(2), delta_poly() + ScalarPoly(Rational(-2, 3)));
  EXPECT_EQ(parse_diagram_element<FreeWord>(diagram_element_str(x)), x);
  EXPECT_TRUE(parse_diagram_element<FreeWord>("0").empty());
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_diagram_element<FreeWord>("2 {\"n_bottom\":1}"), ParseError);
  EXPECT_THROW(parse_diagram_element<FreeWord>("{\"n_bottom\":1,\"n_top\":1,\"pairs\":[[\"b1\",\"t2\"]]}"), ParseError);
  EXPECT_THROW(parse_diagram_element<FreeWord>("{\"n_bottom\":2,\"n_top\":0,\"pairs\":[[\"b1\",\"b2\"]],\"decor\":{\"b1-t1\":\"u1\"}}"),
               ParseError);
  EXPECT_THROW(parse_diagram_element<FreeWord>(""), ParseError);
}
