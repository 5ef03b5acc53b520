#include "ratdyn/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratdyn::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modular inverse of zero");
  return pow(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 PrimeStream::next() {
  while (next_ > 3) {
    --next_;
    if (is_prime(next_)) return next_;
  }
  throw std::runtime_error("prime stream exhausted");
}

u64 reduce(const Integer& v, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

u64 reduce(const Scalar& v, u64 p) {
  const u64 n = reduce(v.get_num(), p);
  if (v.get_den() == 1) return n;
  return mul(n, inv(reduce(v.get_den(), p), p), p);
}

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

PolyP reduce_poly(const std::vector<Integer>& a, u64 p) {
  PolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i], p);
  trim(r);
  return r;
}

bool reduce_poly(const Poly& a, u64 p, PolyP& out) {
  out.assign(a.coefficients().size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Scalar& c = a.coefficients()[i];
    if (c.get_den() != 1 && reduce(c.get_den(), p) == 0) return false;
    out[i] = reduce(c, p);
  }
  trim(out);
  return true;
}

PolyP add(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
  trim(r);
  return r;
}

PolyP sub(const PolyP& a, const PolyP& b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = modp::sub(r[i], b[i], p);
  trim(r);
  return r;
}

PolyP mul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  // Accumulate in 128 bits, folding before overflow (products are < 2^124).
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 126;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      if (acc[i + j] >= limit) acc[i + j] %= p;
    }
  }
  PolyP r(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % p);
  trim(r);
  return r;
}

PolyP scale(const PolyP& a, u64 c, u64 p) {
  PolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
  trim(r);
  return r;
}

void divmod(const PolyP& a, const PolyP& b, u64 p, PolyP& q, PolyP& r) {
  if (b.empty()) throw std::domain_error("modular division by zero polynomial");
  r = a;
  const int db = degree(b);
  if (degree(a) < db) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(degree(a) - db) + 1, 0);
  const u64 li = inv(b.back(), p);
  for (int i = degree(a); i >= db; --i) {
    if (r[i] == 0) continue;
    const u64 c = mul(r[i], li, p);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = modp::sub(r[i - db + j], mul(c, b[j], p), p);
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
}

PolyP rem(const PolyP& a, const PolyP& b, u64 p) {
  if (degree(a) < degree(b)) return a;
  PolyP r = a;
  const int db = degree(b);
  const u64 li = inv(b.back(), p);
  for (int i = degree(a); i >= db; --i) {
    if (r[i] == 0) continue;
    const u64 c = mul(r[i], li, p);
    for (int j = 0; j <= db; ++j) r[i - db + j] = modp::sub(r[i - db + j], mul(c, b[j], p), p);
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  return r;
}

PolyP quo(const PolyP& a, const PolyP& b, u64 p) {
  PolyP q, r;
  divmod(a, b, p, q, r);
  return q;
}

PolyP monic(const PolyP& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

PolyP derivative(const PolyP& a, u64 p) {
  if (a.size() <= 1) return {};
  PolyP r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p, p);
  trim(r);
  return r;
}

PolyP gcd(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

bool inverse_mod(const PolyP& a, const PolyP& m, u64 p, PolyP& s) {
  // Extended Euclid tracking only the coefficient of a.
  PolyP r0 = m, r1 = rem(a, m, p);
  PolyP s0, s1{1};
  while (!r1.empty()) {
    PolyP q, r;
    divmod(r0, r1, p, q, r);
    PolyP s2 = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) return false;
  s = rem(scale(s0, inv(r0[0], p), p), m, p);
  return true;
}

PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& m, u64 p) { return rem(mul(a, b, p), m, p); }

PolyP powmod(PolyP base, Integer e, const PolyP& m, u64 p) {
  PolyP result{1};
  result = rem(result, m, p);
  base = rem(base, m, p);
  const std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m, p);
  }
  return result;
}

u64 eval(const PolyP& a, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = add(mul(acc, x, p), *it, p);
  return acc;
}

u64 resultant(PolyP a, PolyP b, u64 p) {
  if (a.empty() || b.empty()) return 0;
  u64 acc = 1;
  for (;;) {
    const int da = degree(a);
    const int db = degree(b);
    if (da == 0) return mul(acc, pow(a[0], static_cast<u64>(db), p), p);
    if (db == 0) return mul(acc, pow(b[0], static_cast<u64>(da), p), p);
    PolyP r = rem(b, a, p);
    if (r.empty()) return 0;
    const int dr = degree(r);
    // Res(a,b) = lc(a)^(db-dr) Res(a,r) = lc(a)^(db-dr) (-1)^(da*dr) Res(r,a)
    acc = mul(acc, pow(a.back(), static_cast<u64>(db - dr), p), p);
    if ((static_cast<long>(da) * dr) % 2 != 0) acc = (acc == 0) ? 0 : p - acc;
    b = std::move(a);
    a = std::move(r);
  }
}

namespace {

PolyP random_poly(int deg_below, u64 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, p - 1);
  PolyP r(static_cast<std::size_t>(deg_below));
  for (auto& c : r) c = dist(rng);
  trim(r);
  return r;
}

void equal_degree_split(const PolyP& g, int d, u64 p, std::mt19937_64& rng, std::vector<PolyP>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  const Integer e = (pd - 1) / 2;
  for (;;) {
    PolyP a = random_poly(degree(g), p, rng);
    if (degree(a) < 1) continue;
    PolyP b = powmod(a, e, g, p);
    b = sub(b, PolyP{1}, p);
    PolyP h = gcd(g, b, p);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(quo(g, h, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyP> factor_squarefree(const PolyP& f_in, u64 p, std::mt19937_64& rng) {
  std::vector<PolyP> out;
  PolyP f = monic(f_in, p);
  if (degree(f) <= 0) return out;
  const PolyP x{0, 1};
  PolyP h = x;
  const Integer pm(static_cast<unsigned long>(p));
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, pm, f, p);
    PolyP g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      f = quo(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  return out;
}

}  // namespace ratdyn::modp
