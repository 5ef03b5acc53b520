#include <gtest/gtest.h>

#include <random>

#include "ratdyn/algebra.hpp"

using namespace ratdyn;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }

// Independent oracle: Euclid over Q, Res(f, g) = lc(g)^deg f * prod f(roots of g).
Scalar euclid_resultant(Poly f, Poly g) {
  // Res(f,g) in this convention equals the classical Res(g,f).
  Scalar acc = 1;
  Poly a = g, b = f;
  for (;;) {
    const int da = a.degree(), db = b.degree();
    if (da == 0) {
      Scalar r = 1;
      for (int i = 0; i < db; ++i) r *= a.leading();
      return acc * r;
    }
    if (db == 0) {
      Scalar r = 1;
      for (int i = 0; i < da; ++i) r *= b.leading();
      return acc * r;
    }
    Poly r = b % a;
    if (r.is_zero()) return 0;
    const int dr = r.degree();
    for (int i = 0; i < db - dr; ++i) acc *= a.leading();
    if ((da * dr) % 2) acc = -acc;
    b = a;
    a = r;
  }
}

Poly random_poly(std::mt19937_64& rng, int deg, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<Scalar> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

}  // namespace

TEST(Gcd, CubicAndQuadratic) { EXPECT_EQ(gcd(P({0, -1, 0, 1}), P({-1, 0, 1})), P({-1, 0, 1})); }

TEST(Gcd, CoprimeIsOne) { EXPECT_EQ(gcd(P({1, 0, 1}), P({-2, 0, 1})), P({1})); }

TEST(Gcd, RandomCommonFactorRecovered) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Poly h = random_poly(rng, 3, 9).monic();
    Poly a = random_poly(rng, 4, 50), b = random_poly(rng, 5, 50);
    Poly g = gcd(a * h, b * h);
    EXPECT_TRUE(g.divides(a * h));
    EXPECT_TRUE(g.divides(b * h));
    EXPECT_TRUE(h.divides(g));
    // Cofactors are coprime: the oracle is the Euclidean remainder sequence.
    Poly u = Poly::exact_div(a * h, g), v = Poly::exact_div(b * h, g);
    EXPECT_EQ(extended_gcd(u, v).gcd.degree(), 0);
  }
}

TEST(Gcd, RationalCoefficients) {
  Poly f = Poly{make_scalar(1, 2), make_scalar(-3, 4), make_scalar(1, 4)};  // (z-1)(z-2)/4
  Poly g = Poly{make_scalar(-2, 3), make_scalar(1, 3)};
  EXPECT_EQ(gcd(f, g), P({-2, 1}));
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(P({1, 0, 1}), P({-2, 0, 1})), 9);
  EXPECT_EQ(resultant(P({-2, 1}), P({-3, 1})), 1);
  EXPECT_EQ(resultant(P({-1, 0, 1}), P({-1, 1})), 0);
}

TEST(Resultant, MatchesEuclideanOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Poly f = random_poly(rng, 1 + trial % 6, 20) * make_scalar(3, 7);
    Poly g = random_poly(rng, 1 + (trial * 5) % 7, 20) * make_scalar(-5, 2);
    EXPECT_EQ(resultant(f, g), euclid_resultant(f, g));
  }
}

TEST(NormPolynomial, SimpleValues) {
  EXPECT_EQ(norm_polynomial(P({-2, 0, 1}), P({0, 1}), P({1})), P({-2, 0, 1}));
  // Roots +-sqrt2 of q, map z^2/(z+1): values sum -4, product -4.
  EXPECT_EQ(norm_polynomial(P({-2, 0, 1}), P({0, 0, 1}), P({1, 1})), P({-4, 4, 1}));
  EXPECT_THROW(norm_polynomial(P({-1, 0, 1}), P({1}), P({1, 1})), std::domain_error);
}

TEST(NormPolynomial, LinearFactorsGiveExactValues) {
  // q with rational roots 1, 2, -3: product of (w - num(r)/den(r)).
  Poly q = P({-1, 1}) * P({-2, 1}) * P({3, 1});
  Poly num = P({1, 0, 3}), den = P({5, 1});
  Poly expect = Poly::constant(1);
  for (long r : {1L, 2L, -3L}) expect = expect * Poly{-(num(r) / den(r)), 1};
  EXPECT_EQ(norm_polynomial(q * make_scalar(7, 3), num * 2, den * 2), expect);
}

TEST(Squarefree, Decomposition) {
  Poly f = P({-1, 1}) * P({1, 1}).pow(2) * P({1, 0, 1}).pow(3) * 5;
  auto parts = squarefree_parts(f);
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0].factor, P({-1, 1}));
  EXPECT_EQ(parts[1].factor, P({1, 1}));
  EXPECT_EQ(parts[2].multiplicity, 3);
  EXPECT_EQ(squarefree_kernel(f), P({-1, 1}) * P({1, 1}) * P({1, 0, 1}));
  EXPECT_FALSE(is_squarefree(f));
  EXPECT_TRUE(is_squarefree(P({-1, 0, 0, 1})));
}

TEST(Interpolation, RecoversPolynomial) {
  Poly f = Poly{make_scalar(1, 3), -2, 0, make_scalar(5, 2)};
  std::vector<Scalar> xs{0, 1, -1, make_scalar(1, 2)}, ys;
  for (const auto& x : xs) ys.push_back(f(x));
  EXPECT_EQ(interpolate(xs, ys), f);
}

TEST(InverseMod, Inverse) {
  Poly m = P({1, 0, 1}), a = P({1, 1});
  Poly inv = inverse_mod(a, m);
  EXPECT_EQ((a * inv) % m, P({1}));
  EXPECT_THROW(inverse_mod(P({-1, 1}), P({-1, 0, 1})), std::domain_error);
}
