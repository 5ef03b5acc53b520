#ifndef RATDYN_ALGEBRA_HPP
#define RATDYN_ALGEBRA_HPP

#include <utility>
#include <vector>

#include "ratdyn/numeric.hpp"
#include "ratdyn/poly.hpp"

namespace ratdyn {

/// Monic greatest common divisor over Q. Both inputs zero is rejected.
///
/// Computed by a multimodular algorithm (word primes, CRT, trial-division
/// check), so the answer is always verified to divide both inputs.
Poly gcd(const Poly& f, const Poly& g);

/// Bezout data: s*f + t*g = gcd(f, g) (monic).
struct Bezout {
  Poly gcd, s, t;
};
Bezout extended_gcd(const Poly& f, const Poly& g);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

/// Resultant with the convention Res(f, g) = lc(g)^deg(f) * prod_{g(b)=0} f(b).
/// Zero inputs are rejected.
Scalar resultant(const Poly& f, const Poly& g);

/// prod over the roots alpha of q (with multiplicity) of (w - num(alpha)/den(alpha)),
/// returned as a monic polynomial in w.
///
/// This is Res_z(q(z), w*den(z) - num(z)) normalised to be monic, evaluated
/// modulo enough word primes to cover the Hadamard bound and reconstructed
/// exactly. Requires gcd(q, den) = 1.
Poly norm_polynomial(const Poly& q, const Poly& num, const Poly& den);

/// Yun squarefree decomposition: f = unit * prod a_i^i with a_i monic,
/// squarefree and pairwise coprime. Only nonconstant a_i are returned.
struct SquarefreePart {
  Poly factor;
  int multiplicity;
};
std::vector<SquarefreePart> squarefree_parts(const Poly& f);

/// Monic product of the distinct irreducible factors of f.
Poly squarefree_kernel(const Poly& f);

bool is_squarefree(const Poly& f);

/// Least common multiple (monic) of squarefree-or-not polynomials.
Poly lcm(const Poly& f, const Poly& g);

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

/// Dense matrix over Q, row major.
using Matrix = std::vector<std::vector<Scalar>>;

/// Basis of the right null space {v : M v = 0} (reduced echelon form, one
/// vector per free column, that column set to 1).
std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t columns);

}  // namespace ratdyn

#endif  // RATDYN_ALGEBRA_HPP
