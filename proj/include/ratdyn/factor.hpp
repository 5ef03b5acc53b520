#ifndef RATDYN_FACTOR_HPP
#define RATDYN_FACTOR_HPP

#include <utility>
#include <vector>

#include "ratdyn/bipoly.hpp"
#include "ratdyn/numeric.hpp"
#include "ratdyn/poly.hpp"

namespace ratdyn {

/// unit * prod factor^multiplicity. Factors are primitive, normalized to
/// leading coefficient 1 and pairwise distinct.
template <class P>
struct FactorList {
  Scalar unit = 1;
  std::vector<std::pair<P, int>> factors;

  P expand() const {
    P acc = P::one();
    for (const auto& [f, k] : factors)
      for (int i = 0; i < k; ++i) acc = acc * f;
    return acc * unit;
  }
  int count() const { return static_cast<int>(factors.size()); }
};

/// Largest degree accepted by factor_univariate for a single squarefree part.
inline constexpr int kUnivariateFactorBudget = 64;

/// Yun decomposition f = unit * prod a_i^i, ordered by multiplicity.
FactorList<Poly> squarefree_decompose(const Poly& f);

/// Complete factorization over Q (Zassenhaus: factor modulo a word prime,
/// Hensel lift, recombine subsets). Throws BudgetExceeded when a squarefree
/// part has degree above kUnivariateFactorBudget.
FactorList<Poly> factor_univariate(const Poly& f);

bool is_irreducible(const Poly& f);

/// Distinct rational roots of a nonzero polynomial, ascending. Works for any
/// degree (roots modulo a prime are lifted p-adically and reconstructed).
std::vector<Scalar> rational_roots(const Poly& f);

/// Complete factorization in Q[x, y]. Content in y is factored univariately;
/// the primitive part is split into squarefree parts and each is factored by
/// specializing y, lifting the factors (y - y0)-adically and recombining.
FactorList<BiPoly> factor_bivariate(const BiPoly& f);

bool is_irreducible(const BiPoly& f);

}  // namespace ratdyn

#endif  // RATDYN_FACTOR_HPP
