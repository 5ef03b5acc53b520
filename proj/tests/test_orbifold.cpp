#include <gtest/gtest.h>

#include "ratdyn/orbifold.hpp"

using namespace ratdyn;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }
RationalMap M(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return RationalMap(P(num), P(den));
}
ProjPoint pt(long v) { return ProjPoint(Scalar(v)); }
const ProjPoint kInf = ProjPoint::infinity();

Poly cheb_poly(int n) {
  Poly a = P({1}), b = P({0, 1});
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    Poly c = P({0, 2}) * b - a;
    a = b;
    b = c;
  }
  return b;
}
RationalMap cheb(int n) { return RationalMap(cheb_poly(n)); }
RationalMap duplication() { return M({1, 0, 2, 0, 1}, {0, -4, 0, 4}); }

Orbifold cheb_orbifold() { return Orbifold::from_points({{pt(1), 2}, {pt(-1), 2}, {kInf, Nu::infinity()}}); }
Orbifold power_orbifold() { return Orbifold::from_points({{pt(0), Nu::infinity()}, {kInf, Nu::infinity()}}); }
Orbifold lattes_orbifold() { return Orbifold::from_points({{pt(0), 2}, {pt(1), 2}, {pt(-1), 2}, {kInf, 2}}); }

std::vector<Nu> sig(std::initializer_list<long> values) {
  std::vector<Nu> out;
  for (long v : values) out.push_back(v < 0 ? Nu::infinity() : Nu(v));
  return out;
}

}  // namespace

TEST(EulerChar, ParabolicSignatures) {
  for (const auto& s : {sig({2, 2, 2, 2}), sig({3, 3, 3}), sig({2, 4, 4}), sig({2, 3, 6}), sig({2, 2, -1}),
                        sig({-1, -1})})
    EXPECT_EQ(euler_char(s), 0);
  EXPECT_GT(euler_char(sig({2, 2, 2})), 0);
  EXPECT_LT(euler_char(sig({2, 2, 2, 3})), 0);
  EXPECT_LT(euler_char(sig({3, 3, 4})), 0);
  EXPECT_EQ(euler_char(sig({})), 2);
}

TEST(Orbifold, CanonicalizationAndValidation) {
  Orbifold o = Orbifold::from_points({{kInf, Nu::infinity()}, {pt(-1), 2}, {pt(1), 2}});
  EXPECT_EQ(o, cheb_orbifold());
  EXPECT_EQ(o.signature_string(), "(2,2,inf)");
  EXPECT_EQ(o.nu_at(pt(1)), Nu(2));
  EXPECT_EQ(o.nu_at(pt(0)), Nu(1));
  EXPECT_TRUE(o.nu_at(kInf).is_infinite());
  ASSERT_EQ(o.loci().size(), 2U);
  EXPECT_EQ(o.loci()[0].points.finite, P({-1, 0, 1}));
  EXPECT_THROW(Orbifold::from_points({{pt(1), 2}, {pt(1), 3}}), std::invalid_argument);
  EXPECT_THROW(Orbifold::from_points({{pt(1), 1}}), std::invalid_argument);
  PointSet bad;
  bad.finite = P({1, 2, 1});
  EXPECT_THROW(Orbifold({{bad, 2}}), std::invalid_argument);
}

TEST(PointSet, Images) {
  PointSet s = PointSet::roots(P({-1, 0, 1}));
  s.infinity = true;
  const PointSet img = image(s, cheb(2));
  EXPECT_EQ(img.finite, P({-1, 1}));
  EXPECT_TRUE(img.infinity);
  const PointSet m = image(s, Mobius(0, 1, 1, -1));  // 1/(z-1)
  EXPECT_TRUE(m.infinity);
  EXPECT_EQ(m.finite, P({1, 2}).monic() * P({0, 1}));
  const PointSet sq = image(PointSet::roots(P({-2, 0, 1})), M({0, 0, 1}, {1, 1}));
  EXPECT_EQ(sq.finite, P({-4, 4, 1}));
}

TEST(Covering, StandardExamples) {
  EXPECT_TRUE(is_covering(M({0, 0, 1}), power_orbifold(), power_orbifold()).covering);
  EXPECT_TRUE(is_covering(cheb(2), cheb_orbifold(), cheb_orbifold()).covering);
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(is_covering(cheb(n), cheb_orbifold(), cheb_orbifold()).covering) << n;
  const auto cert = is_covering(duplication(), lattes_orbifold(), lattes_orbifold());
  EXPECT_TRUE(cert.covering) << cert.failure;
  EXPECT_FALSE(cert.matches.empty());
  EXPECT_TRUE(riemann_hurwitz_check(duplication(), lattes_orbifold(), lattes_orbifold()));
  EXPECT_TRUE(riemann_hurwitz_check(cheb(3), cheb_orbifold(), cheb_orbifold()));
}

TEST(Covering, Failures) {
  const auto c1 = is_covering(M({0, 0, 1}), cheb_orbifold(), cheb_orbifold());
  EXPECT_FALSE(c1.covering);
  EXPECT_FALSE(c1.failure.empty());
  EXPECT_FALSE(is_covering(M({1, 0, 1}), power_orbifold(), power_orbifold()).covering);
  EXPECT_FALSE(is_covering(cheb(2), Orbifold(), Orbifold()).covering);
  EXPECT_FALSE(riemann_hurwitz_check(M({1, 0, 1}), power_orbifold(), power_orbifold()));
}

TEST(Covering, CompositionClosure) {
  const RationalMap d2 = compose(duplication(), duplication());
  EXPECT_TRUE(is_covering(d2, lattes_orbifold(), lattes_orbifold()).covering);
  EXPECT_TRUE(is_covering(compose(cheb(2), cheb(3)), cheb_orbifold(), cheb_orbifold()).covering);
}

TEST(InducedOrbifold, Examples) {
  // z^2 pushes (inf, inf) to itself.
  EXPECT_EQ(induced_orbifold(power_orbifold(), M({0, 0, 1})), power_orbifold());
  // Chebyshev orbifold under T2 is itself.
  EXPECT_EQ(induced_orbifold(cheb_orbifold(), cheb(2)), cheb_orbifold());
  // z^2 with nu = 2 at 0 and infinity: 0 and infinity get nu = 4.
  Orbifold o = Orbifold::from_points({{pt(0), 2}, {kInf, 2}});
  EXPECT_EQ(induced_orbifold(o, M({0, 0, 1})), Orbifold::from_points({{pt(0), 4}, {kInf, 4}}));
  EXPECT_THROW(induced_orbifold(Orbifold(), M({0, 0, 1})), std::domain_error);
  // nu = 2 at 1 only: fibre over 1 is {1, -1} with values 2 and 1.
  EXPECT_THROW(induced_orbifold(Orbifold::from_points({{pt(1), 2}}), M({0, 0, 1})), std::domain_error);
}

TEST(CanonicalOrbifold, Examples) {
  for (int n = 2; n <= 4; ++n) {
    auto o = infer_canonical_orbifold(RationalMap(Poly::monomial(1, n)));
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(*o, power_orbifold());
  }
  for (int n = 2; n <= 5; ++n) {
    auto o = infer_canonical_orbifold(cheb(n));
    ASSERT_TRUE(o.has_value()) << n;
    EXPECT_EQ(*o, cheb_orbifold()) << n;
  }
  auto l = infer_canonical_orbifold(duplication());
  ASSERT_TRUE(l.has_value());
  EXPECT_EQ(*l, lattes_orbifold());
  EXPECT_FALSE(infer_canonical_orbifold(M({1, 0, 1})).has_value());
  // z^2 - 1: superattracting 2-cycle 0, -1 and infinity give (inf,inf,inf).
  EXPECT_FALSE(infer_canonical_orbifold(M({-1, 0, 1})).has_value());
}
