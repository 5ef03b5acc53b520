#include "ratdyn/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ratdyn/algebra.hpp"
#include "ratdyn/factor.hpp"

namespace ratdyn {

namespace {

using Complex = std::complex<long double>;

const Mobius kReciprocal(0, 1, 1, 0);
const long double kMargin = std::ldexp(1.0L, -20);

Scalar exact(long double v) {
  int e = 0;
  const long double frac = std::frexp(v, &e);
  const auto mant = static_cast<long long>(std::ldexp(frac, 62));
  Scalar r(static_cast<long>(mant));
  if (e - 62 >= 0)
    r *= Scalar(Integer(1) << static_cast<unsigned>(e - 62));
  else
    r /= Scalar(Integer(1) << static_cast<unsigned>(62 - e));
  return r;
}

long double approx(const Scalar& v) { return static_cast<long double>(v.get_d()); }

Complex eval(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// |p(z)|^2 exactly for z = x + iy with rational x, y.
Scalar norm_sq_at(const Poly& p, const Scalar& x, const Scalar& y) {
  Scalar re = 0, im = 0;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar nr = re * x - im * y + p.coeff(k);
    const Scalar ni = re * y + im * x;
    re = nr;
    im = ni;
  }
  return re * re + im * im;
}

Character classify_disk(long double modulus, long double radius) {
  if (!std::isfinite(radius)) return Character::indeterminate;
  const long double slack = 1e-15L * (1 + modulus) + radius * 1e-9L;
  if (modulus + radius + slack < 1 - kMargin) return Character::attracting;
  if (modulus - radius - slack > 1 + kMargin) return Character::repelling;
  return Character::indeterminate;
}

Character classify_exact(const Scalar& lambda) {
  const Scalar m = abs(lambda);
  if (m < 1) return Character::attracting;
  if (m > 1) return Character::repelling;
  return Character::indifferent;
}

std::string format(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << static_cast<double>(z.real()) << (z.imag() < 0 ? "-" : "+") << std::abs(static_cast<double>(z.imag())) << "*i";
  return os.str();
}

}  // namespace

void check_spectrum_budget(int d, int s) {
  long ds = 1;
  for (int i = 0; i < s; ++i) {
    ds *= d;
    if (ds > kSpectrumBudget)
      throw BudgetExceeded("multiplier_polynomial: d^s exceeds " + std::to_string(kSpectrumBudget));
  }
}

Poly multiplier_polynomial(const RationalMap& a, int s) {
  const int d = a.degree();
  if (d < 2) throw std::invalid_argument("multiplier_polynomial: degree must be at least 2");
  if (s < 1) throw std::invalid_argument("multiplier_polynomial: s must be at least 1");
  check_spectrum_budget(d, s);
  long ds = 1;
  for (int i = 0; i < s; ++i) ds *= d;
  const RationalMap as = iterate(a, s);
  const Poly fixed = fixed_point_polynomial(as);
  const RationalFunction da = derivative(as);
  Poly m = Poly::one();
  for (const auto& part : squarefree_parts(fixed))
    m = m * norm_polynomial(part.factor, da.num(), da.den()).pow(static_cast<unsigned>(part.multiplicity));
  const int at_infinity = static_cast<int>(ds) + 1 - fixed.degree();
  if (at_infinity > 0) {
    Scalar lambda = 1;
    if (at_infinity == 1) {
      const RationalMap g = conjugate(as, kReciprocal);
      const Scalar q = g.den()(0);
      lambda = wronskian(g)(0) / (q * q);
    }
    m = m * Poly{-lambda, 1}.pow(static_cast<unsigned>(at_infinity));
  }
  return m;
}

bool isospectral(const RationalMap& a, const RationalMap& b, int s_max) {
  if (a.degree() != b.degree()) throw std::invalid_argument("isospectral: degrees differ");
  for (int s = 1; s <= s_max; ++s)
    if (multiplier_polynomial(a, s) != multiplier_polynomial(b, s)) return false;
  return true;
}

std::string to_string(Character c) {
  switch (c) {
    case Character::attracting:
      return "attracting";
    case Character::repelling:
      return "repelling";
    case Character::indifferent:
      return "indifferent";
    case Character::indeterminate:
      return "indeterminate";
  }
  return "";
}

std::vector<RootEnclosure> enclose_roots(const Poly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  if (n == 1) {
    const Scalar r = -p.coeff(0) / p.coeff(1);
    return {{Complex(approx(r), 0), 0}};
  }
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1), dc(static_cast<std::size_t>(n));
  for (int k = 0; k <= n; ++k) c[k] = approx(p.coeff(k));
  for (int k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<long double>(k);
  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k] / c[n]));
  bound += 1;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const long double pi = std::acos(-1.0L);
  for (int k = 0; k < n; ++k) z[k] = std::polar(bound * 0.9L, 2 * pi * k / n + 0.4L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      const Complex ratio = eval(c, z[i]) / eval(dc, z[i]);
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      const Complex step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (worst < 1e-19L) break;
  }
  // Inclusion radii n |p(z_i)| / |lc prod (z_i - z_j)|, with the residual
  // and product evaluated exactly at the rational centres.
  std::vector<Scalar> xr(static_cast<std::size_t>(n)), yr(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xr[i] = exact(z[i].real());
    yr[i] = exact(z[i].imag());
  }
  std::vector<RootEnclosure> out;
  const Scalar lc2 = p.leading() * p.leading();
  for (int i = 0; i < n; ++i) {
    Scalar prod = lc2;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Scalar dx = xr[i] - xr[j], dy = yr[i] - yr[j];
      prod *= dx * dx + dy * dy;
    }
    long double radius = std::numeric_limits<long double>::infinity();
    if (prod != 0) {
      const Scalar r2 = Scalar(n) * n * norm_sq_at(p, xr[i], yr[i]) / prod;
      radius = std::sqrt(approx(r2)) * (1 + 1e-12L) + std::numeric_limits<long double>::denorm_min();
    }
    out.push_back({z[i], radius});
  }
  return out;
}

std::vector<FixedPointClass> classify_fixed_points(const RationalMap& a) {
  if (a.degree() < 2) throw std::invalid_argument("classify_fixed_points: degree must be at least 2");
  std::vector<FixedPointClass> out;
  const Poly fixed = fixed_point_polynomial(a);
  const RationalFunction da = derivative(a);
  auto rational_entry = [](const Scalar& lambda) { return RootCharacter{classify_exact(lambda), true, to_string(lambda)}; };
  for (const auto& [q, k] : factor_univariate(fixed).factors) {
    FixedPointClass fc{q.to_string(), k, "", {}};
    if (k > 1) {
      fc.multiplier_polynomial = Poly{-1, 1}.pow(static_cast<unsigned>(q.degree())).to_string("w");
      for (int i = 0; i < q.degree(); ++i) fc.roots.push_back(rational_entry(1));
      out.push_back(std::move(fc));
      continue;
    }
    const Poly norm = norm_polynomial(q, da.num(), da.den());
    fc.multiplier_polynomial = norm.to_string("w");
    for (const auto& [r, e] : factor_univariate(norm).factors) {
      for (int rep = 0; rep < e; ++rep) {
        if (r.degree() == 1) {
          fc.roots.push_back(rational_entry(-r.coeff(0) / r.coeff(1)));
          continue;
        }
        const auto disks = enclose_roots(r);
        // Overlapping disks share one verdict unless all agree.
        std::vector<std::size_t> comp(disks.size());
        std::iota(comp.begin(), comp.end(), 0);
        for (std::size_t i = 0; i < disks.size(); ++i)
          for (std::size_t j = i + 1; j < disks.size(); ++j)
            if (std::abs(disks[i].center - disks[j].center) <= disks[i].radius + disks[j].radius) {
              const std::size_t from = comp[j], to = comp[i];
              for (auto& c : comp)
                if (c == from) c = to;
            }
        std::vector<Character> verdict(disks.size());
        for (std::size_t i = 0; i < disks.size(); ++i)
          verdict[i] = classify_disk(std::abs(disks[i].center), disks[i].radius);
        for (std::size_t i = 0; i < disks.size(); ++i) {
          Character v = verdict[i];
          for (std::size_t j = 0; j < disks.size(); ++j)
            if (comp[j] == comp[i] && verdict[j] != v) v = Character::indeterminate;
          fc.roots.push_back({v, false, format(disks[i].center)});
        }
      }
    }
    out.push_back(std::move(fc));
  }
  const int at_infinity = a.degree() + 1 - fixed.degree();
  if (at_infinity > 0) {
    Scalar lambda = 1;
    if (at_infinity == 1) {
      const RationalMap g = conjugate(a, kReciprocal);
      const Scalar q = g.den()(0);
      lambda = wronskian(g)(0) / (q * q);
    }
    out.push_back({"inf", at_infinity, Poly{-lambda, 1}.to_string("w"), {rational_entry(lambda)}});
  }
  return out;
}

}  // namespace ratdyn
