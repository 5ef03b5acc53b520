#ifndef RATDYN_SRC_INTPOLY_HPP
#define RATDYN_SRC_INTPOLY_HPP

// Small helpers on integer coefficient vectors (ascending, trimmed).

#include <vector>

#include "ratdyn/modular.hpp"
#include "ratdyn/numeric.hpp"

namespace ratdyn::detail {

using IVec = std::vector<Integer>;

inline void trim(IVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline IVec mul(const IVec& a, const IVec& b) {
  if (a.empty() || b.empty()) return {};
  IVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

inline Integer content(const IVec& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(IVec& a) {
  trim(a);
  if (a.empty()) return;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Exact division over Z; returns false if b does not divide a in Z[x].
inline bool divide_exact(const IVec& a, const IVec& b, IVec& q) {
  if (b.empty()) return false;
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  if (da < db) {
    q.clear();
    return a.empty();
  }
  IVec r = a;
  q.assign(static_cast<std::size_t>(da - db) + 1, 0);
  Integer t;
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  trim(q);
  return true;
}

/// Symmetric residue in (-m/2, m/2].
inline Integer symmetric_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

/// Ceiling of log2 of the Euclidean norm.
inline std::size_t norm_bits(const IVec& a) {
  Integer s = 0;
  for (const auto& c : a) mpz_addmul(s.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  r += 1;
  return bit_length(r);
}

/// One CRT step: (acc mod m) and (r mod p) -> acc mod m*p.
inline void crt_combine(IVec& acc, const Integer& m, const modp::PolyP& r, modp::u64 p, std::size_t len) {
  const modp::u64 minv = modp::inv(modp::reduce(m, p), p);
  acc.resize(len, 0);
  Integer t;
  for (std::size_t i = 0; i < len; ++i) {
    const modp::u64 ri = i < r.size() ? r[i] : 0;
    const modp::u64 ai = modp::reduce(acc[i], p);
    const modp::u64 k = modp::mul(modp::sub(ri, ai, p), minv, p);
    if (k == 0) continue;
    mpz_addmul_ui(acc[i].get_mpz_t(), m.get_mpz_t(), k);
  }
}

}  // namespace ratdyn::detail

#endif  // RATDYN_SRC_INTPOLY_HPP
