#include <gtest/gtest.h>

#include <random>

#include "ratdyn/expr.hpp"

using namespace ratdyn;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_map("z^2"), RationalMap(P({0, 0, 1})));
  EXPECT_EQ(parse_map("T(6)"), RationalMap(P({-1, 0, 18, 0, -48, 0, 32})));
  EXPECT_EQ(parse_map("(z^4+2*z^2+1)/(4*z^3-4*z)"), multiplication_map(EllipticCurve(-1, 0), 2).map);
  EXPECT_EQ(parse_map("lattes(-1,0,2)"), parse_map("(z^4+2*z^2+1)/(4*z^3-4*z)"));
  EXPECT_EQ(parse_map("pow(-2)"), RationalMap(P({1}), P({0, 0, 1})));
  EXPECT_EQ(parse_map("z^-1 + 1"), RationalMap(P({1, 1}), P({0, 1})));
  EXPECT_EQ(parse_map("-z^2"), RationalMap(P({0, 0, -1})));
  EXPECT_EQ(parse_map("2*z^3/5 - 1/2"), RationalMap(Poly{Scalar(-1, 2), 0, 0, Scalar(2, 5)}));
  EXPECT_EQ(parse_map(" ( z + 1 ) ^ 2 "), RationalMap(P({1, 2, 1})));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_map("3"), ParseError);
  EXPECT_THROW(parse_map("z/(z-z)"), ParseError);
  EXPECT_THROW(parse_map("z^"), ParseError);
  EXPECT_THROW(parse_map("(z+1"), ParseError);
  EXPECT_THROW(parse_map("z $ 2"), ParseError);
  EXPECT_THROW(parse_map("T(0)"), ParseError);
  EXPECT_THROW(parse_map("z*(z-1)/(z^2-z)"), ParseError);
  try {
    parse_map("z +\n  * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(parse_map(std::string(70000, ' ') + "z"), ParseError);
}

TEST(Parse, RoundTrip) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int i = 0; i < 40; ++i) {
    std::vector<Scalar> n(4), d(3);
    for (auto& x : n) x = make_scalar(dist(rng), 1 + (i % 4));
    for (auto& x : d) x = dist(rng);
    try {
      const RationalMap f{Poly(n), Poly(d)};
      EXPECT_EQ(parse_map(f.to_string()), f) << f.to_string();
    } catch (const std::domain_error&) {
    }
  }
}

TEST(ParseOrbifold, Examples) {
  const Orbifold o = parse_orbifold("(2,2,inf)@{1,-1,inf}");
  EXPECT_EQ(o.signature_string(), "(2,2,inf)");
  EXPECT_EQ(o.nu_at(ProjPoint(Scalar(-1))), Nu(2));
  const Orbifold l = parse_orbifold("(2,2,2,2)@{poly:z^3-z,inf}");
  EXPECT_EQ(l, lattes_orbifold(EllipticCurve(-1, 0)));
  EXPECT_EQ(parse_orbifold("(2,2,2,2)@{poly:0;-1;0;1,inf}"), l);
  EXPECT_EQ(parse_orbifold("(inf,inf)@{0,inf}").signature_string(), "(inf,inf)");
  EXPECT_THROW(parse_orbifold("(2,3)@{poly:z^2-1}"), ParseError);
  EXPECT_THROW(parse_orbifold("(2,2)@{1}"), ParseError);
  EXPECT_THROW(parse_orbifold("2,2@{1,2}"), ParseError);
  EXPECT_THROW(parse_orbifold("(2,x)@{1,2}"), ParseError);
}

TEST(ParseCurve, Examples) {
  EXPECT_EQ(parse_curve("-1,0"), EllipticCurve(-1, 0));
  EXPECT_EQ(parse_curve("1/2, 3"), EllipticCurve(Scalar(1, 2), 3));
  EXPECT_THROW(parse_curve("1"), ParseError);
}
