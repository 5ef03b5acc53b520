#include <gtest/gtest.h>

#include "ratdyn/lattes.hpp"

using namespace ratdyn;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }
const EllipticCurve kE(-1, 0);
const EllipticCurve kF(0, 1);

}  // namespace

TEST(EllipticCurve, Validation) {
  EXPECT_THROW(EllipticCurve(-3, 2), std::invalid_argument);
  EXPECT_EQ(kE.cubic(), P({0, -1, 0, 1}));
}

TEST(DivisionPolynomials, SmallEntries) {
  const auto psi = division_polynomials(kE, 4);
  ASSERT_EQ(psi.size(), 4U);
  EXPECT_EQ(psi[0], P({1}));
  EXPECT_EQ(psi[1] * psi[1] * kE.cubic(), P({0, -4, 0, 4}));
  EXPECT_EQ(psi[2], P({-1, 0, -6, 0, 3}));
  // The 5-division polynomial has degree (25 - 1) / 2.
  EXPECT_EQ(division_polynomials(kF, 7)[4].degree(), 12);
  EXPECT_EQ(division_polynomials(kF, 7)[6].degree(), 24);
}

TEST(MultiplicationMap, Duplication) {
  EXPECT_EQ(multiplication_map(kE, 2).map, RationalMap(P({1, 0, 2, 0, 1}), P({0, -4, 0, 4})));
  // Generic duplication formula (x^4 - 2a x^2 - 8b x + a^2) / (4 (x^3 + a x + b)).
  EXPECT_EQ(multiplication_map(kF, 2).map, RationalMap(P({0, -8, 0, 0, 1}), P({4, 0, 0, 4})));
}

TEST(MultiplicationMap, DegreesAndCommutation) {
  for (const auto& e : {kE, kF})
    for (int n = 2; n <= 5; ++n) EXPECT_EQ(multiplication_map(e, n).map.degree(), n * n);
  const RationalMap a2 = multiplication_map(kE, 2).map, a3 = multiplication_map(kE, 3).map;
  EXPECT_EQ(compose(a2, a3), compose(a3, a2));
  EXPECT_EQ(compose(a2, a3), multiplication_map(kE, 6).map);
  EXPECT_EQ(compose(a2, a2), multiplication_map(kE, 4).map);
}

TEST(MultiplicationMap, CoveringAndRiemannHurwitz) {
  for (const auto& e : {kE, kF})
    for (int n = 2; n <= 3; ++n) {
      const auto l = multiplication_map(e, n);
      EXPECT_EQ(l.orb.signature_string(), "(2,2,2,2)");
      EXPECT_TRUE(riemann_hurwitz_check(l.map, l.orb, l.orb));
    }
}

TEST(Velu, TwoIsogeny) {
  const auto iso = velu_isogeny(kE, P({0, 1}));
  EXPECT_EQ(iso.target, EllipticCurve(4, 0));
  EXPECT_EQ(iso.xmap, RationalMap(P({-1, 0, 1}), P({0, 1})));
  EXPECT_EQ(iso.degree, 2);
  const auto dual = dual_isogeny(iso, 2);
  EXPECT_EQ(dual.degree, 2);
  EXPECT_EQ(compose(dual.xmap, iso.xmap), multiplication_map(kE, 2).map);
  EXPECT_EQ(compose(dual.xmap, iso.xmap).degree(), 4);
  EXPECT_THROW(velu_isogeny(kE, P({-2, 1})), std::invalid_argument);
}

TEST(Velu, TrivialAndOdd) {
  const auto id = velu_isogeny(kE, P({1}));
  EXPECT_EQ(id.xmap, RationalMap::identity());
  EXPECT_THROW(dual_isogeny(id, 2), std::invalid_argument);
  // (0, 1) generates a rational 3-subgroup on y^2 = x^3 + 1.
  const auto iso = velu_isogeny(kF, P({0, 1}));
  EXPECT_EQ(iso.degree, 3);
  EXPECT_EQ(iso.target, EllipticCurve(0, -27));
  EXPECT_EQ(iso.xmap.degree(), 3);
  const auto a3 = multiplication_map(kF, 3).map;
  const auto dual = dual_isogeny(iso, 3);
  EXPECT_EQ(compose(dual.xmap, iso.xmap), a3);
  EXPECT_THROW(velu_isogeny(kF, P({-1, 1})), std::invalid_argument);
}

TEST(MutualPair, Tower) {
  const auto p = build_mutual_pair(kE, 2, 3);
  EXPECT_EQ(p.a_source.map.degree(), 9);
  EXPECT_EQ(p.a_target.map.degree(), 9);
  EXPECT_EQ(p.x.degree() * p.y.degree(), 4);
  EXPECT_GE(p.x.degree(), 2);
  EXPECT_GE(p.y.degree(), 2);
  EXPECT_EQ(compose(p.y, p.a_source.map), compose(p.a_target.map, p.y));
  EXPECT_EQ(compose(p.x, p.a_target.map), compose(p.a_source.map, p.x));
  EXPECT_EQ(p.induced.signature_string(), "(2,2,2,2)");
  EXPECT_THROW(build_mutual_pair(kE, 2, 2), std::invalid_argument);
}

TEST(MutualPair, IrrationalTwoTorsion) {
  const auto p = build_mutual_pair(kF, 2, 3);
  EXPECT_EQ(compose(p.x, p.y), multiplication_map(kF, 2).map);
}

TEST(Families, ChebyshevAndPower) {
  EXPECT_EQ(chebyshev(3), RationalMap(P({0, -3, 0, 4})));
  EXPECT_EQ(chebyshev(1), RationalMap::identity());
  EXPECT_EQ(power_map(-2), RationalMap(P({1}), P({0, 0, 1})));
  EXPECT_EQ(power_map(3), RationalMap(P({0, 0, 0, 1})));
  EXPECT_THROW(power_map(1), std::invalid_argument);
  const Mobius neg(-1, 0, 0, 1);
  for (int n = 3; n <= 5; n += 2)
    for (int m = 1; m <= 4; ++m)
      for (int s : {1, -1}) {
        const RationalMap tm = s > 0 ? chebyshev(m) : compose(neg, chebyshev(m));
        EXPECT_NE(compose(neg, compose(chebyshev(n), tm)), compose(tm, chebyshev(n))) << n << " " << m;
      }
}

TEST(MultiplierFormula, OddScale) {
  for (int n : {3, 5}) {
    const auto r = check_multiplier_formula(multiplication_map(kE, n));
    EXPECT_TRUE(r.holds());
    ASSERT_EQ(r.checks.size(), 4U);
    EXPECT_EQ(r.checks[0].residue, std::to_string(n * n));
  }
  EXPECT_TRUE(check_multiplier_formula(multiplication_map(kF, 3)).holds());
  const auto even = check_multiplier_formula(multiplication_map(kE, 2));
  EXPECT_FALSE(even.applicable);
}
