#include "ratdyn/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "intpoly.hpp"
#include "ratdyn/algebra.hpp"
#include "ratdyn/modular.hpp"

namespace ratdyn {

using detail::IVec;
using modp::PolyP;
using modp::u64;

namespace {

constexpr u64 kFactorPrimeStart = 1ULL << 31;
constexpr int kPrimeTrials = 5;

IVec to_ivec(const PolyP& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

Integer ui(u64 v) { return Integer(static_cast<unsigned long>(v)); }

// Multifactor linear Hensel lifting: f = lc * prod g_i (mod p) -> (mod p^K).
std::vector<IVec> hensel_lift(const IVec& f, const std::vector<PolyP>& g, u64 p, int K) {
  const std::size_t r = g.size();
  std::vector<PolyP> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    PolyP others{1};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = modp::mul(others, g[j], p);
    if (!modp::inverse_mod(others, g[i], p, s[i])) throw std::logic_error("hensel: factors not coprime");
  }
  std::vector<IVec> lifted(r);
  for (std::size_t i = 0; i < r; ++i) lifted[i] = to_ivec(g[i]);
  const Integer& lc = f.back();
  const u64 lc_inv = modp::inv(modp::reduce(lc, p), p);
  Integer pk = ui(p);
  for (int k = 1; k < K; ++k) {
    IVec prod{lc};
    for (const auto& gi : lifted) prod = detail::mul(prod, gi);
    IVec e(std::max(prod.size(), f.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = (i < f.size() ? f[i] : Integer(0)) - (i < prod.size() ? prod[i] : Integer(0));
      mpz_divexact(e[i].get_mpz_t(), e[i].get_mpz_t(), pk.get_mpz_t());
    }
    PolyP ep = modp::scale(modp::reduce_poly(e, p), lc_inv, p);
    if (!ep.empty()) {
      for (std::size_t i = 0; i < r; ++i) {
        const PolyP d = modp::rem(modp::mul(ep, s[i], p), g[i], p);
        for (std::size_t j = 0; j < d.size(); ++j) mpz_addmul_ui(lifted[i][j].get_mpz_t(), pk.get_mpz_t(), d[j]);
      }
    }
    pk *= ui(p);
  }
  return lifted;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f primitive, squarefree, positive leading coefficient, degree >= 2, f(0) != 0.
std::vector<IVec> zassenhaus(const IVec& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  modp::PrimeStream primes(kFactorPrimeStart);
  std::vector<PolyP> best;
  u64 best_p = 0;
  for (int tried = 0; tried < kPrimeTrials;) {
    const u64 p = primes.next();
    if (modp::reduce(f.back(), p) == 0) continue;
    const PolyP fp = modp::reduce_poly(f, p);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
    ++tried;
    std::vector<PolyP> fs = modp::factor_squarefree(fp, p, rng);
    if (best.empty() || fs.size() < best.size()) {
      best = std::move(fs);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }
  const u64 p = best_p;
  // Coefficients of lc * (any factor) are below 2^n |f|_2 |lc|.
  Integer norm_sq = 0;
  for (const auto& c : f) mpz_addmul(norm_sq.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  Integer bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n) + 1);
  int K = 1;
  Integer pk = ui(p);
  while (pk <= bound) {
    pk *= ui(p);
    ++K;
  }
  std::vector<IVec> lifted = hensel_lift(f, best, p, K);

  std::vector<IVec> out;
  IVec rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    do {
      IVec cand{rest.back()};
      for (std::size_t idx : comb) {
        cand = detail::mul(cand, lifted[idx]);
        for (auto& c : cand) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
      }
      for (auto& c : cand) c = detail::symmetric_mod(c, pk);
      detail::make_primitive(cand);
      if (cand.empty() || cand[0] == 0 || !mpz_divisible_p(rest[0].get_mpz_t(), cand[0].get_mpz_t())) continue;
      IVec q;
      if (!detail::divide_exact(rest, cand, q)) continue;
      out.push_back(std::move(cand));
      rest = std::move(q);
      std::vector<IVec> remaining;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (std::find(comb.begin(), comb.end(), i) == comb.end()) remaining.push_back(std::move(lifted[i]));
      lifted = std::move(remaining);
      found = true;
      break;
    } while (next_combination(comb, lifted.size()));
    if (!found) ++s;
  }
  if (rest.size() > 1) {
    detail::make_primitive(rest);
    out.push_back(std::move(rest));
  }
  return out;
}

// Irreducible monic factors of a monic squarefree rational polynomial.
std::vector<Poly> factor_squarefree_rational(const Poly& a) {
  if (a.degree() <= 1) return {a.monic()};
  if (a.degree() > kUnivariateFactorBudget)
    throw BudgetExceeded("univariate factorization degree budget exceeded (" + std::to_string(a.degree()) + " > " +
                         std::to_string(kUnivariateFactorBudget) + ")");
  IVec f = to_primitive_integer(a).ints;
  std::vector<Poly> out;
  if (f[0] == 0) {
    out.push_back(Poly::identity());
    f.erase(f.begin());
  }
  if (f.size() == 2) {
    out.push_back(from_integers(f).monic());
  } else if (f.size() > 2) {
    for (const auto& g : zassenhaus(f)) out.push_back(from_integers(g).monic());
  }
  return out;
}

template <class P>
void sort_factors(FactorList<P>& fl) {
  std::sort(fl.factors.begin(), fl.factors.end(), [](const auto& u, const auto& v) {
    if (u.first != v.first) return P::less(u.first, v.first);
    return u.second < v.second;
  });
}

}  // namespace

FactorList<Poly> squarefree_decompose(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  FactorList<Poly> out;
  out.unit = f.leading();
  for (const auto& part : squarefree_parts(f)) out.factors.emplace_back(part.factor, part.multiplicity);
  return out;
}

FactorList<Poly> factor_univariate(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factorization of zero");
  FactorList<Poly> out;
  out.unit = f.leading();
  for (const auto& part : squarefree_parts(f))
    for (auto& q : factor_squarefree_rational(part.factor)) out.factors.emplace_back(std::move(q), part.multiplicity);
  sort_factors(out);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const auto fl = factor_univariate(f);
  return fl.count() == 1 && fl.factors[0].second == 1;
}

std::vector<Scalar> rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Scalar> roots;
  if (f.degree() < 1) return roots;
  IVec F = to_primitive_integer(squarefree_kernel(f)).ints;
  if (F[0] == 0) {
    roots.emplace_back(0);
    F.erase(F.begin());
  }
  if (F.size() >= 2) {
    const Integer lc = F.back();
    const Poly Fq = from_integers(F);
    Integer height = abs(lc);
    for (const auto& c : F) height = std::max(height, Integer(abs(c)));
    const Integer target = 2 * (height + abs(lc)) + 1;
    modp::PrimeStream primes(kFactorPrimeStart);
    std::mt19937_64 rng(0x243f6a8885a308d3ULL);
    for (;;) {
      const u64 p = primes.next();
      if (modp::reduce(lc, p) == 0) continue;
      const PolyP fp = modp::reduce_poly(F, p);
      const PolyP dfp = modp::derivative(fp, p);
      if (modp::degree(modp::gcd(fp, dfp, p)) != 0) continue;
      const PolyP x{0, 1};
      const PolyP xp = modp::sub(modp::powmod(x, ui(p), modp::monic(fp, p), p), x, p);
      const PolyP lin = modp::gcd(fp, xp, p);
      std::vector<u64> residues;
      if (modp::degree(lin) >= 1)
        for (const auto& q : modp::factor_squarefree(lin, p, rng)) residues.push_back(modp::sub(0, q[0], p));
      const IVec dF = [&] {
        IVec d(F.size() - 1);
        for (std::size_t i = 1; i < F.size(); ++i) d[i - 1] = F[i] * static_cast<unsigned long>(i);
        return d;
      }();
      auto eval_mod = [](const IVec& poly, const Integer& x0, const Integer& m) {
        Integer acc = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
          acc = acc * x0 + *it;
          mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
        }
        return acc;
      };
      for (u64 r0 : residues) {
        Integer m = ui(p), r = ui(r0);
        while (m <= target) {
          m = m * m;
          Integer fv = eval_mod(F, r, m), dv = eval_mod(dF, r, m), inv;
          mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t());
          r = r - fv * inv;
          mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        }
        Scalar cand(detail::symmetric_mod(lc * r, m), lc);
        cand.canonicalize();
        if (Fq(cand) == 0) roots.push_back(cand);
      }
      break;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

using Series = std::vector<Poly>;  // coefficient of t^k, each a polynomial in x

// Sample points 0, 1, -1, 2, -2, ...
Scalar sample_point(int k) {
  const long m = (k + 1) / 2;
  return Scalar(k % 2 == 1 ? m : -m);
}

Series to_series(const BiPoly& f, int K) {
  Series s(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    std::vector<Scalar> c(static_cast<std::size_t>(f.degree_x()) + 1);
    for (int i = 0; i <= f.degree_x(); ++i) c[i] = f.coeff(i, k);
    s[k] = Poly(std::move(c));
  }
  return s;
}

BiPoly from_series(const Series& s) {
  int dx = -1;
  for (const auto& p : s) dx = std::max(dx, p.degree());
  std::vector<Poly> rows(static_cast<std::size_t>(dx + 1));
  for (int i = 0; i <= dx; ++i) {
    std::vector<Scalar> c(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) c[k] = s[k].coeff(i);
    rows[i] = Poly(std::move(c));
  }
  return BiPoly(std::move(rows));
}

Series series_mul(const Series& a, const Series& b, int K) {
  Series r(static_cast<std::size_t>(K));
  for (int i = 0; i < K && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < K && j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

BiPoly primitive_x(const BiPoly& f) { return f.divide_y(f.content_x()); }

// Irreducible factors of a squarefree polynomial that is primitive in x.
std::vector<BiPoly> factor_squarefree_bivariate(const BiPoly& S) {
  if (S.degree_x() <= 0) throw std::logic_error("factor_squarefree_bivariate: no x-dependence");
  if (S.degree_y() == 0) {
    std::vector<BiPoly> out;
    for (const auto& [q, k] : factor_univariate(S.eval_y(0)).factors) out.push_back(BiPoly::from_x(q));
    return out;
  }
  if (S.degree_x() == 1) return {S.normalized()};

  Scalar y0;
  std::vector<Poly> best;
  int valid = 0;
  for (int k = 0; k < 400 && valid < kPrimeTrials; ++k) {
    const Scalar c = sample_point(k);
    if (S.leading_x()(c) == 0) continue;
    const Poly s0 = S.eval_y(c);
    if (!is_squarefree(s0)) continue;
    ++valid;
    std::vector<Poly> fs;
    for (const auto& [q, m] : factor_univariate(s0).factors) fs.push_back(q);
    if (best.empty() || fs.size() < best.size()) {
      best = std::move(fs);
      y0 = c;
    }
    if (best.size() == 1) return {S.normalized()};
  }
  if (valid == 0) throw std::runtime_error("no squarefree specialization found");

  const int K = S.degree_y() + 1;
  const BiPoly T = S.shift_y(y0);
  const Series Ts = to_series(T, K);
  // Monic-in-x power series T / lc_x(T).
  const Poly& L = T.leading_x();
  std::vector<Scalar> linv(static_cast<std::size_t>(K));
  linv[0] = 1 / L.coeff(0);
  for (int k = 1; k < K; ++k) {
    Scalar acc = 0;
    for (int j = 1; j <= k; ++j) acc += L.coeff(j) * linv[k - j];
    linv[k] = -acc * linv[0];
  }
  Series Tm(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k)
    for (int j = 0; j <= k; ++j)
      if (linv[k - j] != 0) Tm[k] += Ts[j] * linv[k - j];

  const std::size_t r = best.size();
  std::vector<Poly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    Poly others = Poly::one();
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = others * best[j];
    s[i] = inverse_mod(others, best[i]);
  }
  std::vector<Series> G(r, Series(static_cast<std::size_t>(K)));
  for (std::size_t i = 0; i < r; ++i) G[i][0] = best[i];
  // prefix[j] = G_0 ... G_{j-1}.
  std::vector<Series> prefix(r + 1, Series(static_cast<std::size_t>(K)));
  prefix[0][0] = Poly::one();
  for (std::size_t j = 1; j <= r; ++j) prefix[j][0] = prefix[j - 1][0] * G[j - 1][0];
  auto update_prefix = [&](int k) {
    for (std::size_t j = 1; j <= r; ++j) {
      Poly acc;
      for (int a = 0; a <= k; ++a)
        if (!prefix[j - 1][a].is_zero() && !G[j - 1][k - a].is_zero()) acc += prefix[j - 1][a] * G[j - 1][k - a];
      prefix[j][k] = std::move(acc);
    }
  };
  for (int k = 1; k < K; ++k) {
    update_prefix(k);
    const Poly e = Tm[k] - prefix[r][k];
    if (e.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) G[i][k] = (e * s[i]) % best[i];
    update_prefix(k);
  }

  std::vector<BiPoly> out;
  BiPoly rest = S;
  std::vector<Series> pool = std::move(G);
  std::size_t sz = 1;
  while (2 * sz <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> comb(sz);
    for (std::size_t i = 0; i < sz; ++i) comb[i] = i;
    const BiPoly rest_shifted = rest.shift_y(y0);
    do {
      Series cand(static_cast<std::size_t>(K));
      for (int k = 0; k < K; ++k) cand[k] = Poly::constant(rest_shifted.leading_x().coeff(k));
      for (std::size_t idx : comb) cand = series_mul(cand, pool[idx], K);
      BiPoly h = from_series(cand).shift_y(-y0);
      if (h.is_zero() || h.degree_y() > rest.degree_y()) continue;
      h = primitive_x(h);
      BiPoly q;
      if (!BiPoly::divide(rest, h, q)) continue;
      out.push_back(h.normalized());
      rest = std::move(q);
      std::vector<Series> remaining;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (std::find(comb.begin(), comb.end(), i) == comb.end()) remaining.push_back(std::move(pool[i]));
      pool = std::move(remaining);
      found = true;
      break;
    } while (next_combination(comb, pool.size()));
    if (!found) ++sz;
  }
  if (rest.degree_x() > 0) out.push_back(rest.normalized());
  return out;
}

}  // namespace

FactorList<BiPoly> factor_bivariate(const BiPoly& f) {
  if (f.is_zero()) throw std::domain_error("factorization of zero");
  FactorList<BiPoly> out;
  out.unit = f.leading_coefficient();
  const Poly content = f.content_x();
  for (const auto& [q, k] : factor_univariate(content).factors) out.factors.emplace_back(BiPoly::from_y(q), k);
  const BiPoly F = f.divide_y(content);
  if (F.degree_x() > 0) {
    // Yun over Q(y)[x] with primitive bivariate gcds.
    std::vector<std::pair<BiPoly, int>> parts;
    const BiPoly Fx = F.derivative_x();
    const BiPoly a0 = gcd(F, Fx);
    auto exact = [](const BiPoly& a, const BiPoly& b) {
      BiPoly q;
      if (!BiPoly::divide(a, b, q)) throw std::logic_error("bivariate squarefree decomposition: inexact division");
      return q;
    };
    if (a0.degree_x() == 0) {
      parts.emplace_back(F, 1);
    } else {
      BiPoly b = exact(F, a0);
      BiPoly c = exact(Fx, a0);
      BiPoly d = c - b.derivative_x();
      for (int i = 1; b.degree_x() > 0; ++i) {
        const BiPoly a = d.is_zero() ? b.normalized() : gcd(b, d);
        if (a.degree_x() > 0) parts.emplace_back(a, i);
        b = exact(b, a);
        c = exact(d, a);
        d = c - b.derivative_x();
      }
    }
    for (const auto& [part, k] : parts)
      for (auto& h : factor_squarefree_bivariate(primitive_x(part))) out.factors.emplace_back(std::move(h), k);
  }
  sort_factors(out);
  return out;
}

bool is_irreducible(const BiPoly& f) {
  if (f.is_zero() || f.total_degree() < 1) return false;
  const auto fl = factor_bivariate(f);
  return fl.count() == 1 && fl.factors[0].second == 1;
}

}  // namespace ratdyn
