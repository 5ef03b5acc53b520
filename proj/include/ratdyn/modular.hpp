#ifndef RATDYN_MODULAR_HPP
#define RATDYN_MODULAR_HPP

// Polynomial arithmetic over Z/pZ for word-size primes p < 2^62. Used as the
// fast path behind integer gcds, Zassenhaus factoring and the multimodular
// resultant; nothing here is part of the public mathematical surface.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ratdyn/numeric.hpp"
#include "ratdyn/poly.hpp"

namespace ratdyn::modp {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;  // ascending, trimmed

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

bool is_prime(u64 n);
/// Primes below `start` in decreasing order, skipping none.
class PrimeStream {
 public:
  explicit PrimeStream(u64 start) : next_(start) {}
  u64 next();

 private:
  u64 next_;
};

u64 reduce(const Integer& v, u64 p);
u64 reduce(const Scalar& v, u64 p);  // caller guarantees p does not divide the denominator

void trim(PolyP& a);
int degree(const PolyP& a);
PolyP reduce_poly(const std::vector<Integer>& a, u64 p);
/// Reduces a rational polynomial; returns false if p divides a denominator.
bool reduce_poly(const Poly& a, u64 p, PolyP& out);

PolyP add(const PolyP& a, const PolyP& b, u64 p);
PolyP sub(const PolyP& a, const PolyP& b, u64 p);
PolyP mul(const PolyP& a, const PolyP& b, u64 p);
PolyP scale(const PolyP& a, u64 c, u64 p);
void divmod(const PolyP& a, const PolyP& b, u64 p, PolyP& q, PolyP& r);
PolyP rem(const PolyP& a, const PolyP& b, u64 p);
PolyP quo(const PolyP& a, const PolyP& b, u64 p);
PolyP monic(const PolyP& a, u64 p);
PolyP derivative(const PolyP& a, u64 p);
/// Monic gcd (zero if both are zero).
PolyP gcd(PolyP a, PolyP b, u64 p);
/// s with s*a = gcd(a, m) mod m; returns false if gcd(a, m) != 1.
bool inverse_mod(const PolyP& a, const PolyP& m, u64 p, PolyP& s);
PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& m, u64 p);
PolyP powmod(PolyP base, Integer e, const PolyP& m, u64 p);
u64 eval(const PolyP& a, u64 x, u64 p);
/// Resultant with the convention lc(a)^deg(b) * prod_{a(alpha)=0} b(alpha).
u64 resultant(PolyP a, PolyP b, u64 p);

/// Factors a monic squarefree polynomial into monic irreducibles
/// (distinct-degree then equal-degree splitting).
std::vector<PolyP> factor_squarefree(const PolyP& f, u64 p, std::mt19937_64& rng);

}  // namespace ratdyn::modp

#endif  // RATDYN_MODULAR_HPP
