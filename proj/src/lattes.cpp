#include "ratdyn/lattes.hpp"

#include <functional>
#include <stdexcept>

#include "ratdyn/algebra.hpp"
#include "ratdyn/factor.hpp"

namespace ratdyn {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Sum of h over the roots of a monic D: the coefficient of x^{d-1} in h D' mod D.
Scalar root_sum(const Poly& d, const Poly& h) { return ((h * d.derivative()) % d).coeff(d.degree() - 1); }

// Roots of `kernel` are carried into roots of `kernel` by the k-th multiple.
bool closed_under(const EllipticCurve& e, const Poly& kernel, int k) {
  const RationalMap ak = multiplication_map(e, k).map;
  return (homogenize(kernel, ak.num(), ak.den(), kernel.degree()) % kernel).is_zero();
}

}  // namespace

EllipticCurve::EllipticCurve(Scalar a, Scalar b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant() == 0) throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
}

Poly EllipticCurve::cubic() const { return Poly{b_, a_, 0, 1}; }

std::string EllipticCurve::to_string() const {
  return "y^2 = " + cubic().to_string("x") + " (a=" + ratdyn::to_string(a_) + ", b=" + ratdyn::to_string(b_) + ")";
}

std::vector<Poly> division_polynomials(const EllipticCurve& e, int n) {
  if (n < 1) throw std::invalid_argument("division_polynomials: n must be at least 1");
  const Scalar& a = e.a();
  const Scalar& b = e.b();
  const Poly f = e.cubic();
  const Poly f2 = f * f;
  std::vector<Poly> phi(static_cast<std::size_t>(std::max(n, 4)) + 1);
  phi[0] = Poly();
  phi[1] = Poly::one();
  phi[2] = Poly::constant(2);
  phi[3] = Poly{-a * a, 12 * b, 6 * a, 0, 3};
  phi[4] = Poly{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1} * Scalar(4);
  for (int k = 5; k <= n; ++k) {
    const int h = k / 2;
    if (k % 2 == 1) {
      const Poly p = phi[h + 2] * phi[h].pow(3), q = phi[h - 1] * phi[h + 1].pow(3);
      phi[k] = h % 2 == 0 ? f2 * p - q : p - f2 * q;
    } else {
      phi[k] = phi[h] * (phi[h + 2] * phi[h - 1].pow(2) - phi[h - 2] * phi[h + 1].pow(2)) * Scalar(1, 2);
    }
  }
  return {phi.begin() + 1, phi.begin() + n + 1};
}

Orbifold lattes_orbifold(const EllipticCurve& e) {
  PointSet torsion = PointSet::roots(e.cubic());
  return Orbifold({{torsion, Nu(2)}, {PointSet::of(ProjPoint::infinity()), Nu(2)}});
}

LattesMap multiplication_map(const EllipticCurve& e, int n) {
  if (n < 2) throw std::invalid_argument("multiplication_map: n must be at least 2");
  const auto phi = division_polynomials(e, n + 1);
  const Poly f = e.cubic();
  Poly sq = phi[n - 1] * phi[n - 1];
  Poly cross = phi[n - 2] * phi[n];
  if (n % 2 == 0)
    sq = sq * f;
  else
    cross = cross * f;
  LattesMap l{RationalMap(Poly::identity() * sq - cross, sq), e, n, lattes_orbifold(e)};
  if (l.map.degree() != n * n) throw std::logic_error("multiplication map has the wrong degree");
  const auto cert = is_covering(l.map, l.orb, l.orb);
  if (!cert.covering) throw std::logic_error("multiplication map is not a covering: " + cert.failure);
  return l;
}

IsogenyData velu_isogeny(const EllipticCurve& e, const Poly& kernel) {
  if (kernel.is_zero() || kernel.leading() != 1) throw std::invalid_argument("velu_isogeny: kernel must be monic");
  if (kernel.degree() == 0) return {e, e, kernel, RationalMap::identity(), 1};
  const Scalar& a = e.a();
  const Scalar& b = e.b();
  const Poly x = Poly::identity();
  if (kernel.degree() == 1 && (e.cubic() % kernel).is_zero()) {
    const Scalar x0 = -kernel.coeff(0);
    const Scalar t = 3 * x0 * x0 + a;
    const Scalar w = x0 * t;
    const RationalMap xmap(x * kernel + Poly::constant(t), kernel);
    return {e, EllipticCurve(a - 5 * t, b - 7 * w), kernel, xmap, 2};
  }
  const int d = kernel.degree();
  const int ell = 2 * d + 1;
  const auto phi = division_polynomials(e, ell);
  if (!(phi[ell - 1] % kernel).is_zero())
    throw std::invalid_argument("velu_isogeny: kernel does not divide the " + std::to_string(ell) +
                                "-division polynomial");
  for (int k = 2; k <= d; ++k)
    if (!closed_under(e, kernel, k)) throw std::invalid_argument("velu_isogeny: kernel roots are not a subgroup");
  const Poly t = Poly{2 * a, 0, 6};
  const Poly u = e.cubic() * Scalar(4);
  const Poly dd = kernel.derivative();
  const Poly rt = (t * dd) % kernel, ru = (u * dd) % kernel;
  const Poly den = kernel * kernel;
  const Poly num = x * den + rt * kernel - ru.derivative() * kernel + ru * dd;
  const Scalar tsum = root_sum(kernel, t), wsum = root_sum(kernel, u + x * t);
  return {e, EllipticCurve(a - 5 * tsum, b - 7 * wsum), kernel, RationalMap(num, den), ell};
}

IsogenyData dual_isogeny(const IsogenyData& iso, int n) {
  const int n2 = n * n;
  if (iso.degree <= 1 || iso.degree >= n2 || n2 % iso.degree != 0)
    throw std::invalid_argument("dual_isogeny: the chain must be proper (1 < degree < n^2)");
  const auto x = left_divide(multiplication_map(iso.source, n).map, iso.xmap);
  if (!x) throw std::domain_error("dual_isogeny: no outer factor; kernel data is inconsistent");
  return {iso.target, iso.source, squarefree_kernel(x->den()), *x, n2 / iso.degree};
}

MutualPair build_mutual_pair(const EllipticCurve& e, int n, int m) {
  if (!is_prime(n) || !is_prime(m) || n == m)
    throw std::invalid_argument("build_mutual_pair: n and m must be distinct primes");
  std::optional<IsogenyData> y;
  if (n == 2) {
    const auto roots = rational_roots(e.cubic());
    if (roots.empty()) throw std::domain_error("build_mutual_pair: no rational 2-torsion point");
    y = velu_isogeny(e, Poly{-roots.front(), 1});
  } else {
    const int d = (n - 1) / 2;
    std::vector<Poly> factors;
    for (const auto& [q, k] : factor_univariate(division_polynomials(e, n).back()).factors)
      if (q.degree() <= d) factors.push_back(q);
    std::function<void(std::size_t, Poly)> search = [&](std::size_t i, Poly acc) {
      if (y) return;
      if (acc.degree() == d) {
        try {
          y = velu_isogeny(e, acc);
        } catch (const std::invalid_argument&) {
        }
        return;
      }
      for (std::size_t j = i; j < factors.size(); ++j)
        if (acc.degree() + factors[j].degree() <= d) search(j + 1, acc * factors[j]);
    };
    search(0, Poly::one());
    if (!y) throw std::domain_error("build_mutual_pair: no rational " + std::to_string(n) + "-torsion kernel");
  }
  const IsogenyData x = dual_isogeny(*y, n);
  MutualPair p{multiplication_map(e, m), multiplication_map(y->target, m), x.xmap, y->xmap, *y, x, Orbifold()};
  if (compose(p.y, p.a_source.map) != compose(p.a_target.map, p.y))
    throw std::logic_error("Y o A_m(E) != A_m(E') o Y");
  if (compose(p.x, p.a_target.map) != compose(p.a_source.map, p.x))
    throw std::logic_error("X o A_m(E') != A_m(E) o X");
  if (compose(p.x, p.y) != multiplication_map(e, n).map) throw std::logic_error("X o Y != A_n(E)");
  p.induced = induced_orbifold(p.a_source.orb, p.y);
  if (!(p.induced == p.a_target.orb)) throw std::logic_error("induced orbifold differs from the target orbifold");
  return p;
}

RationalMap chebyshev(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev: n must be at least 1");
  Poly prev = Poly::one(), cur = Poly::identity();
  const Poly two_z{0, 2};
  for (int k = 1; k < n; ++k) {
    Poly next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RationalMap(cur);
}

RationalMap power_map(int n) {
  if (n > -2 && n < 2) throw std::invalid_argument("power_map: |n| must be at least 2");
  const Poly zn = Poly::monomial(1, n > 0 ? n : -n);
  return n > 0 ? RationalMap(zn) : RationalMap(Poly::one(), zn);
}

bool MultiplierReport::holds() const {
  if (!applicable) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

MultiplierReport check_multiplier_formula(const LattesMap& l) {
  MultiplierReport r;
  if (l.scale % 2 == 0) {
    r.reason = "not applicable: scale is even, so the 2-torsion points are not fixed";
    return r;
  }
  r.applicable = true;
  const Scalar target = Scalar(l.scale) * l.scale;
  const RationalFunction dl = derivative(l.map);
  for (const auto& [q, k] : factor_univariate(l.curve.cubic()).factors) {
    const Poly res = (dl.num() * inverse_mod(dl.den(), q)) % q;
    r.checks.push_back({q.to_string("x"), res.to_string("x"), res == Poly::constant(target)});
  }
  const RationalMap g = conjugate(l.map, Mobius(0, 1, 1, 0));
  const Scalar mult = g(ProjPoint(Scalar(0))).is_infinity() ? Scalar(-1) : wronskian(g)(0) / (g.den()(0) * g.den()(0));
  r.checks.push_back({"inf", to_string(mult), g(ProjPoint(Scalar(0))) == ProjPoint(Scalar(0)) && mult == target});
  return r;
}

}  // namespace ratdyn
