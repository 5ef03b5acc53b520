#include <gtest/gtest.h>

#include "ratdyn/decompose.hpp"
#include "ratdyn/lattes.hpp"
#include "ratdyn/orbifold.hpp"
#include "ratdyn/spectrum.hpp"

using namespace ratdyn;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }
RationalMap M(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return RationalMap(P(num), P(den));
}
const RationalMap kSq = M({0, 0, 1});

bool contains_pair(const std::vector<Decomposition>& ds, const RationalMap& u, const RationalMap& v) {
  for (const auto& d : ds)
    if (same_up_to_left_mobius(d.inner, v) && d.outer.degree() == u.degree()) {
      // U o V = A fixes U once V is fixed; compare through a common inner factor.
      const auto mu = Mobius::from_map(*left_divide(d.inner, v));
      if (mu && compose(u, mu->inverse()) == d.outer) return true;
    }
  return false;
}

}  // namespace

TEST(Decompositions, PowerMaps) {
  const auto d4 = all_decompositions(M({0, 0, 0, 0, 1}));
  ASSERT_EQ(d4.size(), 1U);
  EXPECT_EQ(d4[0].outer, kSq);
  EXPECT_EQ(d4[0].inner, kSq);
  EXPECT_TRUE(all_decompositions(M({0, 1, 0, 1})).empty());
  EXPECT_TRUE(all_decompositions(M({1, 0, 3}, {0, 2, 0, 1})).empty());
  EXPECT_THROW(all_decompositions(RationalMap(Poly::monomial(1, 37))), BudgetExceeded);
}

TEST(Decompositions, Chebyshev) {
  const auto ds = all_decompositions(chebyshev(6));
  EXPECT_EQ(ds.size(), 2U);
  EXPECT_TRUE(contains_pair(ds, chebyshev(2), chebyshev(3)));
  EXPECT_TRUE(contains_pair(ds, chebyshev(3), chebyshev(2)));
  for (const auto& d : ds) {
    EXPECT_EQ(compose(d.outer, d.inner), chebyshev(6));
    EXPECT_TRUE(d.proper());
  }
}

TEST(Decompositions, RationalComposite) {
  const RationalMap u = M({1, 0, 1}, {0, 1}), v = M({0, 0, 1}, {1, 0, 1});
  const RationalMap a = compose(u, v);
  bool found = false;
  for (const auto& d : all_decompositions(a)) {
    EXPECT_EQ(compose(d.outer, d.inner), a);
    found = found || same_up_to_left_mobius(d.inner, v);
  }
  EXPECT_TRUE(found);
}

TEST(Decompositions, LattesDuplicationContainsIsogeny) {
  const EllipticCurve e(-1, 0);
  const auto p = build_mutual_pair(e, 2, 3);
  const auto ds = all_decompositions(multiplication_map(e, 2).map);
  bool found = false;
  for (const auto& d : ds)
    if (same_up_to_left_mobius(d.inner, p.y)) {
      found = true;
      EXPECT_EQ(induced_orbifold(lattes_orbifold(e), d.inner).signature_string(), "(2,2,2,2)");
    }
  EXPECT_TRUE(found);
  EXPECT_GE(ds.size(), 3U);
}

TEST(ElementaryTransform, Examples) {
  EXPECT_EQ(elementary_transform(M({0, 0, 0, 0, 1}), {kSq, kSq}), M({0, 0, 0, 0, 1}));
  EXPECT_EQ(elementary_transform(chebyshev(6), {chebyshev(2), chebyshev(3)}), chebyshev(6));
  EXPECT_EQ(elementary_transform(compose(kSq, M({1, 0, 1})), {kSq, M({1, 0, 1})}), M({1, 0, 0, 0, 1}));
  EXPECT_THROW(elementary_transform(kSq, {kSq, kSq}), std::invalid_argument);
}

TEST(MobiusSearch, Examples) {
  const auto r = mobius_conjugacy_search(kSq, M({0, 2, 1}));
  ASSERT_TRUE(r.mu.has_value());
  EXPECT_EQ(conjugate(kSq, *r.mu), M({0, 2, 1}));
  EXPECT_EQ(r.mu->to_map(), M({1, 1}));
  EXPECT_EQ(*mobius_conjugacy_search(chebyshev(3), chebyshev(3)).mu, Mobius::identity());
  const auto t = mobius_conjugacy_search(kSq, chebyshev(2));
  EXPECT_FALSE(t.mu.has_value());
  EXPECT_TRUE(t.conclusive);
  // T2 is conjugate to z^2 - 2 by 2z.
  const auto s = mobius_conjugacy_search(M({-2, 0, 1}), chebyshev(2));
  ASSERT_TRUE(s.mu.has_value());
  EXPECT_EQ(conjugate(M({-2, 0, 1}), *s.mu), chebyshev(2));
}

TEST(Explore, Examples) {
  const auto z4 = explore_equivalence(M({0, 0, 0, 0, 1}), 2);
  EXPECT_EQ(z4.nodes.size(), 1U);
  EXPECT_TRUE(z4.complete);
  const auto only = explore_equivalence(chebyshev(6), 0);
  EXPECT_EQ(only.nodes.size(), 1U);
  EXPECT_TRUE(only.edges.empty());
  const auto t6 = explore_equivalence(chebyshev(6), 2);
  for (const auto& e : t6.edges) {
    EXPECT_TRUE(e.spectra_preserved);
    EXPECT_EQ(compose(e.witness.outer, e.witness.inner), t6.nodes[e.from].map);
    EXPECT_EQ(compose(e.target, e.witness.inner), compose(e.witness.inner, t6.nodes[e.from].map));
  }
  EXPECT_EQ(t6.nodes.size(), 1U);
  // z^2 o (z^2 + 1) and (z^2 + 1) o z^2 are not conjugate but are equivalent.
  const auto g = explore_equivalence(compose(kSq, M({1, 0, 1})), 1);
  ASSERT_GE(g.nodes.size(), 2U);
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    EXPECT_EQ(g.nodes[i].m1, g.nodes[0].m1);
    EXPECT_EQ(g.chain(static_cast<int>(i)).size(), 1U);
  }
}

TEST(Semiconjugacy, Examples) {
  EXPECT_TRUE(verify_semiconjugacy({kSq, kSq, kSq}));
  const RationalMap b = RationalMap(Poly{0, 0, 0, Scalar(4, 25)});
  EXPECT_TRUE(verify_semiconjugacy({b, M({0, 0, 5}), M({0, 0, 0, 2})}));
  EXPECT_FALSE(verify_semiconjugacy({kSq, M({1, 1}), kSq}));
}

TEST(Mutual, Examples) {
  EXPECT_TRUE(verify_mutual(kSq, RationalMap::identity(), RationalMap::identity(), kSq));
  const auto p = build_mutual_pair(EllipticCurve(-1, 0), 2, 3);
  EXPECT_TRUE(verify_mutual(p.a_source.map, p.x, p.y, p.a_target.map));
  EXPECT_FALSE(verify_mutual(p.a_source.map, p.y, p.x, p.a_target.map));
}

TEST(Luroth, Examples) {
  EXPECT_EQ(luroth_generator(kSq, M({0, 0, 0, 1})), RationalMap::identity());
  EXPECT_EQ(luroth_generator(M({0, 0, 0, 0, 1}), RationalMap(Poly::monomial(1, 6))), kSq);
  const RationalMap x = M({1, 0, 0, 2}, {0, 1});
  EXPECT_TRUE(same_up_to_left_mobius(luroth_generator(x, x), x));
  const RationalMap w = luroth_generator(chebyshev(6), chebyshev(4));
  EXPECT_TRUE(same_up_to_left_mobius(w, chebyshev(2)));
}

TEST(Primitive, Examples) {
  EXPECT_TRUE(is_primitive({kSq, RationalMap::identity(), kSq}));
  EXPECT_FALSE(is_primitive({kSq, kSq, kSq}));
  // T2 o T3 = T3 o T2: coprime degrees, and the iterate stays primitive.
  EXPECT_TRUE(is_primitive({chebyshev(2), chebyshev(3), chebyshev(2)}));
  EXPECT_TRUE(verify_semiconjugacy({chebyshev(4), chebyshev(3), chebyshev(4)}));
  EXPECT_TRUE(is_primitive({chebyshev(4), chebyshev(3), chebyshev(4)}));
}

TEST(ReducePrimitive, Examples) {
  const auto r = reduce_to_primitive({kSq, kSq, kSq});
  EXPECT_EQ(r.w, kSq);
  EXPECT_EQ(r.x0, RationalMap::identity());
  EXPECT_EQ(r.b0, kSq);
  EXPECT_EQ(r.chain.size(), 1U);
  const auto same = reduce_to_primitive({chebyshev(2), chebyshev(3), chebyshev(2)});
  EXPECT_EQ(same.w, RationalMap::identity());
  EXPECT_EQ(same.x0, chebyshev(3));
  // X = T6 over T2: X0 o W = X with the reduced triple primitive.
  const auto t = reduce_to_primitive({chebyshev(2), chebyshev(6), chebyshev(2)});
  EXPECT_EQ(compose(t.x0, t.w), chebyshev(6));
  EXPECT_TRUE(is_primitive({chebyshev(2), t.x0, t.b0}));
  EXPECT_TRUE(verify_semiconjugacy({chebyshev(2), t.x0, t.b0}));
  EXPECT_THROW(reduce_to_primitive({kSq, M({1, 1}), kSq}), std::invalid_argument);
}
