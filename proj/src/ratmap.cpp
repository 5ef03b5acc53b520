#include "ratdyn/ratmap.hpp"

#include <algorithm>
#include <stdexcept>

#include "ratdyn/algebra.hpp"

namespace ratdyn {

namespace {

void reduce_pair(Poly& num, Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den = Poly::one();
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
  }
  const Scalar s = 1 / den.leading();
  num *= s;
  den *= s;
}

ProjPoint evaluate(const Poly& num, const Poly& den, const ProjPoint& z) {
  if (z.is_infinity()) {
    if (num.degree() > den.degree()) return ProjPoint::infinity();
    if (num.degree() < den.degree()) return ProjPoint(Scalar(0));
    return ProjPoint(num.leading() / den.leading());
  }
  const Scalar d = den(z.value());
  if (d == 0) return ProjPoint::infinity();
  return ProjPoint(num(z.value()) / d);
}

std::string quotient_string(const Poly& num, const Poly& den, std::string_view var) {
  if (den == Poly::one()) return num.to_string(var);
  return "(" + num.to_string(var) + ")/(" + den.to_string(var) + ")";
}

const Mobius kReciprocal(0, 1, 1, 0);

}  // namespace

const Scalar& ProjPoint::value() const {
  if (infinite_) throw std::domain_error("the point at infinity has no finite value");
  return value_;
}

std::string ProjPoint::to_string() const { return infinite_ ? "inf" : ratdyn::to_string(value_); }

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
  return a.value_ < b.value_;
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  reduce_pair(num_, den_);
}

ProjPoint RationalFunction::operator()(const ProjPoint& z) const { return evaluate(num_, den_, z); }

std::string RationalFunction::to_string(std::string_view var) const { return quotient_string(num_, den_, var); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalMap::RationalMap() : num_(Poly::identity()), den_(Poly::one()) {}

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  reduce_pair(num_, den_);
  if (degree() < 1) throw std::domain_error("constant map");
}

RationalMap RationalMap::from_coprime(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  RationalMap r;
  const Scalar s = 1 / den.leading();
  r.num_ = std::move(num) * s;
  r.den_ = std::move(den) * s;
  if (r.degree() < 1) throw std::domain_error("constant map");
  return r;
}

ProjPoint RationalMap::operator()(const ProjPoint& z) const { return evaluate(num_, den_, z); }

std::string RationalMap::to_string(std::string_view var) const { return quotient_string(num_, den_, var); }

bool RationalMap::less(const RationalMap& a, const RationalMap& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.den_ != b.den_) return Poly::less(a.den_, b.den_);
  return Poly::less(a.num_, b.num_);
}

std::ostream& operator<<(std::ostream& os, const RationalMap& f) { return os << f.to_string(); }

Mobius::Mobius(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ == 0) throw std::domain_error("degenerate Mobius transformation");
}

Mobius Mobius::to_standard(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2) {
  if (p0 == p1 || p1 == p2 || p0 == p2) throw std::invalid_argument("to_standard: points must be distinct");
  Scalar a, b, c, d;
  if (p0.is_infinity()) {
    a = 0, b = 1, c = 1, d = -p2.value();
  } else if (p2.is_infinity()) {
    a = 1, b = -p0.value(), c = 0, d = 1;
  } else {
    a = 1, b = -p0.value(), c = 1, d = -p2.value();
  }
  const Mobius m(a, b, c, d);
  const Scalar t = m(p1).value();
  return Mobius(a / t, b / t, c, d);
}

std::optional<Mobius> Mobius::from_map(const RationalMap& f) {
  if (f.degree() != 1) return std::nullopt;
  return Mobius(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

Mobius Mobius::after(const Mobius& o) const {
  return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

ProjPoint Mobius::operator()(const ProjPoint& z) const {
  if (z.is_infinity()) {
    if (c_ == 0) return ProjPoint::infinity();
    return ProjPoint(a_ / c_);
  }
  const Scalar den = c_ * z.value() + d_;
  if (den == 0) return ProjPoint::infinity();
  return ProjPoint((a_ * z.value() + b_) / den);
}

RationalMap Mobius::to_map() const { return RationalMap(Poly{b_, a_}, Poly{d_, c_}); }

RationalMap compose(const RationalMap& u, const RationalMap& v) {
  const int du = u.degree();
  return RationalMap::from_coprime(homogenize(u.num(), v.num(), v.den(), du), homogenize(u.den(), v.num(), v.den(), du));
}

RationalMap compose(const RationalMap& u, const Mobius& v) { return compose(u, v.to_map()); }
RationalMap compose(const Mobius& u, const RationalMap& v) { return compose(u.to_map(), v); }

RationalMap iterate(const RationalMap& a, int s) {
  if (s < 1) throw std::invalid_argument("iterate: s must be at least 1");
  RationalMap r = a;
  for (int i = 1; i < s; ++i) r = compose(a, r);
  return r;
}

RationalFunction derivative(const RationalMap& a) { return RationalFunction(wronskian(a), a.den() * a.den()); }

RationalMap conjugate(const RationalMap& a, const Mobius& mu) { return compose(mu.inverse(), compose(a, mu)); }

Poly wronskian(const RationalMap& a) { return a.num().derivative() * a.den() - a.num() * a.den().derivative(); }

std::vector<CriticalEntry> critical_divisor(const RationalMap& a) {
  std::vector<CriticalEntry> out;
  const Poly w = wronskian(a);
  if (w.is_zero()) return out;
  for (const auto& part : squarefree_parts(w)) out.push_back({false, part.factor, part.multiplicity});
  std::sort(out.begin(), out.end(), [](const CriticalEntry& x, const CriticalEntry& y) {
    if (x.multiplicity != y.multiplicity) return x.multiplicity < y.multiplicity;
    return Poly::less(x.locus, y.locus);
  });
  const int e_inf = local_degree(a, ProjPoint::infinity());
  if (e_inf > 1) out.push_back({true, Poly(), e_inf - 1});
  return out;
}

int local_degree(const RationalMap& a, const ProjPoint& z) {
  if (z.is_infinity()) return local_degree(compose(a, kReciprocal), ProjPoint(Scalar(0)));
  const Poly w = wronskian(a);
  if (w.is_zero()) return 1;
  return w.shift(z.value()).trailing_zeros() + 1;
}

std::optional<std::pair<int, int>> common_iterate(const RationalMap& a, const RationalMap& b, int s_max, int k_max) {
  if (s_max < 1 || k_max < 1) throw std::invalid_argument("common_iterate: bounds must be positive");
  std::vector<RationalMap> ia, ib;
  auto get = [](std::vector<RationalMap>& cache, const RationalMap& base, int n) {
    while (static_cast<int>(cache.size()) < n) cache.push_back(cache.empty() ? base : compose(base, cache.back()));
    return cache[n - 1];
  };
  const Integer da = a.degree(), db = b.degree();
  for (int s = 1; s <= s_max; ++s) {
    Integer ds;
    mpz_pow_ui(ds.get_mpz_t(), da.get_mpz_t(), static_cast<unsigned long>(s));
    for (int k = 1; k <= k_max; ++k) {
      Integer dk;
      mpz_pow_ui(dk.get_mpz_t(), db.get_mpz_t(), static_cast<unsigned long>(k));
      if (ds != dk) continue;
      if (get(ia, a, s) == get(ib, b, k)) return std::make_pair(s, k);
    }
  }
  return std::nullopt;
}

std::optional<RationalMap> left_divide(const RationalMap& a, const RationalMap& v) {
  const int D = a.degree(), e = v.degree();
  if (D % e != 0) return std::nullopt;
  const int k = D / e;
  // Unknowns u_0..u_k, w_0..w_k:  sum u_i V_i a.den - sum w_i V_i a.num = 0,
  // with V_i = vnum^i vden^(k-i).
  std::vector<Poly> num_pow(static_cast<std::size_t>(k) + 1), den_pow(static_cast<std::size_t>(k) + 1);
  num_pow[0] = den_pow[0] = Poly::one();
  for (int i = 1; i <= k; ++i) {
    num_pow[i] = num_pow[i - 1] * v.num();
    den_pow[i] = den_pow[i - 1] * v.den();
  }
  std::vector<Poly> cols;
  for (int i = 0; i <= k; ++i) cols.push_back(num_pow[i] * den_pow[k - i] * a.den());
  for (int i = 0; i <= k; ++i) cols.push_back(-(num_pow[i] * den_pow[k - i] * a.num()));
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  Matrix m(static_cast<std::size_t>(rows), std::vector<Scalar>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r <= cols[j].degree(); ++r) m[r][j] = cols[j].coeff(r);
  const auto basis = nullspace(std::move(m), cols.size());
  if (basis.empty()) return std::nullopt;
  const auto& sol = basis.front();
  std::vector<Scalar> un(sol.begin(), sol.begin() + k + 1), ud(sol.begin() + k + 1, sol.end());
  try {
    RationalMap u{Poly(un), Poly(ud)};
    if (compose(u, v) == a) return u;
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

Poly fixed_point_polynomial(const RationalMap& a) { return a.num() - Poly::identity() * a.den(); }

}  // namespace ratdyn
