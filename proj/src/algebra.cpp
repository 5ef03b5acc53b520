#include "ratdyn/algebra.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "intpoly.hpp"
#include "ratdyn/modular.hpp"

namespace ratdyn {

using detail::IVec;
using modp::PolyP;
using modp::u64;

namespace {

constexpr u64 kPrimeStart = (1ULL << 62);

IVec to_ivec(const PolyP& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

IVec symmetric(const IVec& a, const Integer& m) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = detail::symmetric_mod(a[i], m);
  detail::trim(r);
  return r;
}

// Newton interpolation mod p through (0, v0), (1, v1), ..., (n, vn).
PolyP interpolate_mod(const std::vector<u64>& vals, u64 p) {
  const std::size_t n = vals.size();
  std::vector<u64> c = vals;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      const u64 num = modp::sub(c[i], c[i - 1], p);
      c[i] = modp::mul(num, modp::inv(static_cast<u64>(k), p), p);
    }
  // Horner in the Newton basis: c0 + (x-0)(c1 + (x-1)(c2 + ...)).
  PolyP r{c[n - 1]};
  modp::trim(r);
  for (std::size_t i = n - 1; i-- > 0;) {
    PolyP shifted(r.size() + 1, 0);
    for (std::size_t j = 0; j < r.size(); ++j) {
      shifted[j + 1] = modp::add(shifted[j + 1], r[j], p);
      shifted[j] = modp::sub(shifted[j], modp::mul(r[j], static_cast<u64>(i) % p, p), p);
    }
    if (shifted.empty()) shifted.push_back(0);
    shifted[0] = modp::add(shifted[0], c[i], p);
    modp::trim(shifted);
    r = std::move(shifted);
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.degree() == 0 || g.degree() == 0) return Poly::constant(1);
  const IVec a = to_primitive_integer(f).ints;
  const IVec b = to_primitive_integer(g).ints;
  Integer lcg;
  mpz_gcd(lcg.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  modp::PrimeStream primes(kPrimeStart);
  IVec acc, previous;
  Integer modulus;
  int current = INT_MAX;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const u64 p = primes.next();
    if (modp::reduce(a.back(), p) == 0 || modp::reduce(b.back(), p) == 0) continue;
    PolyP gp = modp::gcd(modp::reduce_poly(a, p), modp::reduce_poly(b, p), p);
    const int d = modp::degree(gp);
    if (d == 0) return Poly::constant(1);
    if (d > current) continue;
    gp = modp::scale(gp, modp::reduce(lcg, p), p);
    if (d < current) {
      current = d;
      acc = to_ivec(gp);
      acc.resize(static_cast<std::size_t>(d) + 1, 0);
      modulus = Integer(static_cast<unsigned long>(p));
      previous.clear();
      continue;
    }
    detail::crt_combine(acc, modulus, gp, p, static_cast<std::size_t>(d) + 1);
    modulus *= Integer(static_cast<unsigned long>(p));
    IVec candidate = symmetric(acc, modulus);
    detail::make_primitive(candidate);
    if (candidate == previous) {
      IVec q;
      if (detail::divide_exact(a, candidate, q) && detail::divide_exact(b, candidate, q))
        return from_integers(candidate).monic();
    }
    previous = std::move(candidate);
  }
  throw std::runtime_error("modular gcd failed to converge");
}

Bezout extended_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  Bezout b = extended_gcd(a % m, m);
  if (b.gcd.degree() != 0) throw std::domain_error("polynomial is not invertible modulo the given modulus");
  return b.s % m;
}

Scalar resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  const IntegerPoly fi = to_primitive_integer(f);
  const IntegerPoly gi = to_primitive_integer(g);
  const int df = f.degree();
  const int dg = g.degree();
  Scalar scale;
  {
    Integer nf, df_den, ng, dg_den;
    mpz_pow_ui(nf.get_mpz_t(), fi.scale.get_num_mpz_t(), static_cast<unsigned long>(dg));
    mpz_pow_ui(df_den.get_mpz_t(), fi.scale.get_den_mpz_t(), static_cast<unsigned long>(dg));
    mpz_pow_ui(ng.get_mpz_t(), gi.scale.get_num_mpz_t(), static_cast<unsigned long>(df));
    mpz_pow_ui(dg_den.get_mpz_t(), gi.scale.get_den_mpz_t(), static_cast<unsigned long>(df));
    scale = Scalar(nf * ng, df_den * dg_den);
    scale.canonicalize();
  }
  const std::size_t bound_bits =
      static_cast<std::size_t>(dg) * detail::norm_bits(fi.ints) + static_cast<std::size_t>(df) * detail::norm_bits(gi.ints) + 2;
  modp::PrimeStream primes(kPrimeStart);
  IVec acc{0};
  Integer modulus = 1;
  while (bit_length(modulus) <= bound_bits) {
    const u64 p = primes.next();
    if (modp::reduce(fi.ints.back(), p) == 0 || modp::reduce(gi.ints.back(), p) == 0) continue;
    const u64 r = modp::resultant(modp::reduce_poly(gi.ints, p), modp::reduce_poly(fi.ints, p), p);
    detail::crt_combine(acc, modulus, PolyP{r}, p, 1);
    modulus *= Integer(static_cast<unsigned long>(p));
  }
  return scale * Scalar(detail::symmetric_mod(acc[0], modulus));
}

Poly norm_polynomial(const Poly& q, const Poly& num, const Poly& den) {
  if (q.is_zero() || den.is_zero()) throw std::domain_error("norm_polynomial: zero input");
  if (q.degree() == 0) return Poly::constant(1);
  const IVec qi = to_primitive_integer(q).ints;
  // Clear denominators of num and den with a common factor (the ratio is unchanged).
  Integer common = 1;
  for (const auto& c : num.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : den.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  auto scaled = [&](const Poly& p) {
    IVec r(p.coefficients().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Scalar v = p.coefficients()[i] * Scalar(common);
      r[i] = v.get_num();
    }
    detail::trim(r);
    return r;
  };
  const IVec ni = scaled(num);
  const IVec di = scaled(den);
  const int n = q.degree();
  const int m = std::max(num.degree(), den.degree());
  // Hadamard: |R(w)| <= |q|^m (|num| + |den|)^n on the unit circle.
  const std::size_t nd_bits = std::max(detail::norm_bits(ni), detail::norm_bits(di)) + 1;
  const std::size_t bound_bits =
      static_cast<std::size_t>(m) * detail::norm_bits(qi) + static_cast<std::size_t>(n) * nd_bits + 2;

  modp::PrimeStream primes(kPrimeStart);
  IVec acc(static_cast<std::size_t>(n) + 1, 0);
  Integer modulus = 1;
  std::vector<u64> vals(static_cast<std::size_t>(n) + 1);
  while (bit_length(modulus) <= bound_bits) {
    const u64 p = primes.next();
    const u64 lcq = modp::reduce(qi.back(), p);
    if (lcq == 0) continue;
    const PolyP qp = modp::reduce_poly(qi, p);
    const PolyP np = modp::rem(modp::reduce_poly(ni, p), qp, p);
    const PolyP dp = modp::rem(modp::reduce_poly(di, p), qp, p);
    for (int j = 0; j <= n; ++j) {
      const PolyP g = modp::sub(modp::scale(dp, static_cast<u64>(j), p), np, p);
      if (g.empty()) {
        vals[j] = 0;
        continue;
      }
      const u64 res = modp::resultant(qp, g, p);
      vals[j] = modp::mul(res, modp::pow(lcq, static_cast<u64>(m - modp::degree(g)), p), p);
    }
    detail::crt_combine(acc, modulus, interpolate_mod(vals, p), p, acc.size());
    modulus *= Integer(static_cast<unsigned long>(p));
  }
  IVec r = symmetric(acc, modulus);
  if (static_cast<int>(r.size()) - 1 != n)
    throw std::domain_error("norm_polynomial: denominator shares a root with the modulus");
  return from_integers(r).monic();
}

std::vector<SquarefreePart> squarefree_parts(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<SquarefreePart> out;
  if (f.degree() == 0) return out;
  const Poly fm = f.monic();
  const Poly df = fm.derivative();
  const Poly a0 = gcd(fm, df);
  Poly b = Poly::exact_div(fm, a0);
  Poly c = Poly::exact_div(df, a0);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    const Poly a = d.is_zero() ? b.monic() : gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = Poly::exact_div(b, a);
    c = Poly::exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_kernel(const Poly& f) {
  Poly r = Poly::constant(1);
  for (const auto& part : squarefree_parts(f)) r = r * part.factor;
  return r;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

Poly lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return Poly::exact_div(f * g, gcd(f, g)).monic();
}

Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Scalar> c = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      const Scalar dx = xs[i] - xs[i - k];
      if (dx == 0) throw std::invalid_argument("interpolate: repeated node");
      c[i] = (c[i] - c[i - 1]) / dx;
    }
  Poly r;
  for (std::size_t i = n; i-- > 0;) r = r * Poly{-xs[i], 1} + Poly::constant(c[i]);
  return r;
}

std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t columns) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Scalar inv = 1 / m[row][col];
    for (std::size_t j = col; j < columns; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Scalar f = m[i][col];
      for (std::size_t j = col; j < columns; ++j)
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(columns, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(columns);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ratdyn
