#include "ratdyn/orbifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ratdyn/algebra.hpp"
#include "ratdyn/factor.hpp"

namespace ratdyn {

namespace {

constexpr long kNuSaturation = 1L << 40;

Scalar sample_point(int k) {
  const long m = (k + 1) / 2;
  return Scalar(k % 2 == 1 ? m : -m);
}

// sigma(z') = c + 1/z' sends the chart's infinity to c.
Mobius chart(const Scalar& c) { return Mobius(c, 1, 1, 0); }

bool coprime(const Poly& a, const Poly& b) { return gcd(a, b).degree() == 0; }

bool poly_contains(const Poly& big, const Poly& small) { return gcd(big, small) == small.monic(); }

}  // namespace

Nu::Nu(long v) : value_(v) {
  if (v < 1) throw std::invalid_argument("ramification value must be at least 1");
  if (v > kNuSaturation) infinite_ = true;
}

long Nu::value() const {
  if (infinite_) throw std::domain_error("infinite ramification value has no integer value");
  return value_;
}

Scalar Nu::reciprocal() const { return infinite_ ? Scalar(0) : Scalar(1, value_); }

std::string Nu::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Nu Nu::times(long k) const {
  if (infinite_) return *this;
  if (value_ > kNuSaturation / k) return infinity();
  return Nu(value_ * k);
}

Nu Nu::lcm(const Nu& a, const Nu& b) {
  if (a.infinite_ || b.infinite_) return infinity();
  const long g = std::gcd(a.value_, b.value_);
  const long q = a.value_ / g;
  if (q > kNuSaturation / b.value_) return infinity();
  return Nu(q * b.value_);
}

bool Nu::divides(const Nu& a, const Nu& b) {
  if (b.infinite_) return true;
  if (a.infinite_) return false;
  return b.value_ % a.value_ == 0;
}

bool operator<(const Nu& a, const Nu& b) {
  if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
  return a.value_ < b.value_;
}

PointSet PointSet::of(const ProjPoint& p) {
  PointSet s;
  if (p.is_infinity())
    s.infinity = true;
  else
    s.finite = Poly{-p.value(), 1};
  return s;
}

PointSet PointSet::roots(const Poly& p) {
  PointSet s;
  if (p.is_zero()) throw std::domain_error("PointSet::roots of the zero polynomial");
  s.finite = p.degree() > 0 ? squarefree_kernel(p) : Poly::one();
  return s;
}

bool PointSet::contains(const ProjPoint& p) const {
  if (p.is_infinity()) return infinity;
  return finite(p.value()) == 0;
}

bool PointSet::contains(const PointSet& o) const {
  if (o.infinity && !infinity) return false;
  if (o.finite.degree() <= 0) return true;
  return poly_contains(finite, o.finite);
}

std::string PointSet::to_string() const {
  std::vector<std::string> parts;
  if (finite.degree() > 0) parts.push_back(finite.to_string());
  if (infinity) parts.push_back("inf");
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + "}";
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet r;
  r.finite = lcm(a.finite, b.finite);
  r.infinity = a.infinity || b.infinity;
  return r;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet r;
  r.finite = gcd(a.finite, b.finite);
  r.infinity = a.infinity && b.infinity;
  return r;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet r;
  r.finite = Poly::exact_div(a.finite, gcd(a.finite, b.finite)).monic();
  r.infinity = a.infinity && !b.infinity;
  return r;
}

PointSet image(const PointSet& s, const Mobius& mu) {
  PointSet r;
  const int n = s.finite.degree();
  if (n > 0) {
    // Roots of S(mu^{-1}(w)); roots sent to infinity lower the degree.
    const Mobius inv = mu.inverse();
    Poly t = homogenize(s.finite, Poly{inv.b(), inv.a()}, Poly{inv.d(), inv.c()}, n);
    if (t.degree() < n) r.infinity = true;
    r.finite = t.monic();
  }
  if (s.infinity) {
    const ProjPoint p = mu(ProjPoint::infinity());
    if (p.is_infinity())
      r.infinity = true;
    else
      r.finite = r.finite * Poly{-p.value(), 1};
  }
  return r;
}

PointSet image(const PointSet& s, const RationalMap& f) {
  PointSet r;
  if (s.finite.degree() > 0) {
    const Poly poles = gcd(s.finite, f.den());
    const Poly rest = Poly::exact_div(s.finite, poles);
    if (poles.degree() > 0) r.infinity = true;
    if (rest.degree() > 0) r.finite = squarefree_kernel(norm_polynomial(rest, f.num(), f.den()));
  }
  if (s.infinity) r = set_union(r, PointSet::of(f(ProjPoint::infinity())));
  return r;
}

Orbifold::Orbifold(const std::vector<RamifiedLocus>& loci) {
  std::map<Nu, PointSet> finite_by_nu;
  std::optional<Nu> at_infinity;
  PointSet seen;
  for (const auto& l : loci) {
    if (!l.nu.is_infinite() && l.nu.value() < 2) throw std::invalid_argument("malformed orbifold: nu must be at least 2");
    if (l.points.empty()) throw std::invalid_argument("malformed orbifold: empty locus");
    if (l.points.finite.is_zero() || !is_squarefree(l.points.finite))
      throw std::invalid_argument("malformed orbifold: locus " + l.points.finite.to_string() + " is not squarefree");
    if (!set_intersection(seen, l.points).empty())
      throw std::invalid_argument("malformed orbifold: loci " + l.points.to_string() + " overlap");
    seen = set_union(seen, l.points);
    if (l.points.infinity) at_infinity = l.nu;
    if (l.points.finite.degree() > 0) {
      PointSet fin;
      fin.finite = l.points.finite.monic();
      auto it = finite_by_nu.find(l.nu);
      if (it == finite_by_nu.end())
        finite_by_nu.emplace(l.nu, fin);
      else
        it->second = set_union(it->second, fin);
    }
  }
  std::set<Nu> values;
  for (const auto& [nu, ps] : finite_by_nu) values.insert(nu);
  if (at_infinity) values.insert(*at_infinity);
  for (const Nu& nu : values) {
    auto it = finite_by_nu.find(nu);
    if (it != finite_by_nu.end()) loci_.push_back({it->second, nu});
    if (at_infinity && *at_infinity == nu) loci_.push_back({PointSet::of(ProjPoint::infinity()), nu});
  }
}

Orbifold Orbifold::from_points(const std::vector<std::pair<ProjPoint, Nu>>& points) {
  std::vector<RamifiedLocus> loci;
  loci.reserve(points.size());
  for (const auto& [p, nu] : points) loci.push_back({PointSet::of(p), nu});
  return Orbifold(loci);
}

Nu Orbifold::nu_at(const ProjPoint& z) const {
  for (const auto& l : loci_)
    if (l.points.contains(z)) return l.nu;
  return Nu(1);
}

PointSet Orbifold::singular_points() const {
  PointSet s;
  for (const auto& l : loci_) s = set_union(s, l.points);
  return s;
}

std::vector<Nu> Orbifold::signature() const {
  std::vector<Nu> sig;
  for (const auto& l : loci_)
    for (int i = 0; i < l.points.size(); ++i) sig.push_back(l.nu);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::string Orbifold::signature_string() const {
  std::string s = "(";
  const auto sig = signature();
  for (std::size_t i = 0; i < sig.size(); ++i) s += (i ? "," : "") + sig[i].to_string();
  return s + ")";
}

std::string Orbifold::to_string() const {
  std::ostringstream os;
  os << signature_string() << "@[";
  for (std::size_t i = 0; i < loci_.size(); ++i)
    os << (i ? ", " : "") << loci_[i].points.to_string() << ":" << loci_[i].nu.to_string();
  os << "]";
  return os.str();
}

bool operator==(const Orbifold& a, const Orbifold& b) {
  if (a.loci_.size() != b.loci_.size()) return false;
  for (std::size_t i = 0; i < a.loci_.size(); ++i)
    if (!(a.loci_[i].points == b.loci_[i].points) || a.loci_[i].nu != b.loci_[i].nu) return false;
  return true;
}

Scalar euler_char(const std::vector<Nu>& signature) {
  Scalar chi = 2;
  for (const auto& nu : signature) chi += nu.reciprocal() - 1;
  return chi;
}

Scalar euler_char(const Orbifold& o) { return euler_char(o.signature()); }

namespace {

struct GenericLocus {
  Poly points;  // finite, monic squarefree
  Nu nu;
};

std::vector<GenericLocus> to_chart(const Orbifold& o, const Mobius& sigma) {
  const Mobius inv = sigma.inverse();
  std::vector<GenericLocus> out;
  for (const auto& l : o.loci()) {
    const PointSet p = image(l.points, inv);
    if (p.infinity) throw std::logic_error("chart choice failed to move a singular point off infinity");
    out.push_back({p.finite, l.nu});
  }
  return out;
}

std::string describe(const Poly& generic, const Mobius& sigma) {
  PointSet s;
  s.finite = generic.monic();
  return image(s, sigma).to_string();
}

}  // namespace

CoveringCertificate is_covering(const RationalMap& f, const Orbifold& o1, const Orbifold& o2) {
  CoveringCertificate cert;
  const PointSet s1 = o1.singular_points();
  const PointSet s2 = o2.singular_points();
  std::optional<Scalar> cs, ct;
  for (int k = 0; !cs; ++k) {
    const Scalar c = sample_point(k);
    if (s1.contains(ProjPoint(c)) || local_degree(f, ProjPoint(c)) != 1 || s2.contains(f(ProjPoint(c)))) continue;
    cs = c;
  }
  for (int k = 0; !ct; ++k) {
    const Scalar c = sample_point(k);
    if (!s2.contains(ProjPoint(c))) ct = c;
  }
  const Mobius sigma = chart(*cs), tau = chart(*ct);
  const RationalMap g = compose(tau.inverse(), compose(f, sigma));
  const auto loci1 = to_chart(o1, sigma);
  const auto loci2 = to_chart(o2, tau);

  auto union_with_nu = [&](const Nu& nu) {
    Poly u = Poly::one();
    for (const auto& l : loci1)
      if (l.nu == nu) u = u * l.points;
    return u;
  };
  Poly all1 = Poly::one();
  for (const auto& l : loci1) all1 = all1 * l.points;

  Poly over = Poly::one();
  for (const auto& l2 : loci2) {
    const Poly h = homogenize(l2.points, g.num(), g.den(), l2.points.degree());
    for (const auto& part : squarefree_parts(h)) {
      const Poly& c = part.factor;
      const int e = part.multiplicity;
      over = over * c;
      Nu need;
      bool ok;
      if (l2.nu.is_infinite()) {
        need = Nu::infinity();
        ok = poly_contains(union_with_nu(need), c);
      } else if (l2.nu.value() % e != 0) {
        ok = false;
      } else {
        need = Nu(l2.nu.value() / e);
        ok = need == Nu(1) ? coprime(c, all1) : poly_contains(union_with_nu(need), c);
      }
      std::ostringstream line;
      line << "over " << describe(l2.points, tau) << " (nu=" << l2.nu.to_string() << "): " << describe(c, sigma)
           << " with local degree " << e;
      if (!ok) {
        cert.failure = line.str() + " does not carry nu=" +
                       (l2.nu.is_infinite() || l2.nu.value() % e == 0 ? need.to_string() : l2.nu.to_string() + "/" +
                                                                                              std::to_string(e));
        return cert;
      }
      cert.matches.push_back(line.str() + " has nu=" + need.to_string());
    }
  }
  if (!poly_contains(over, all1)) {
    cert.failure = "a singular point of the source does not lie over a singular point of the target";
    return cert;
  }
  const Poly w = wronskian(g);
  if (w.degree() > 0 && !poly_contains(over, squarefree_kernel(w))) {
    cert.failure = "a critical point does not lie over a singular point of the target";
    return cert;
  }
  cert.covering = true;
  return cert;
}

bool riemann_hurwitz_check(const RationalMap& f, const Orbifold& o1, const Orbifold& o2) {
  if (!is_covering(f, o1, o2).covering) return false;
  return euler_char(o1) == Scalar(f.degree()) * euler_char(o2);
}

namespace {

PointSet critical_points(const RationalMap& f) {
  PointSet s;
  const Poly w = wronskian(f);
  if (w.degree() > 0) s.finite = squarefree_kernel(w);
  s.infinity = local_degree(f, ProjPoint::infinity()) > 1;
  return s;
}

}  // namespace

Orbifold induced_orbifold(const Orbifold& o, const RationalMap& y) {
  if (o.empty()) throw std::domain_error("induced orbifold: the orbifold has no ramification to transport");
  const PointSet relevant = set_union(o.singular_points(), critical_points(y));
  const PointSet targets = image(relevant, y);
  std::optional<Scalar> cs, ct;
  for (int k = 0; !cs; ++k) {
    const Scalar c = sample_point(k);
    if (relevant.contains(ProjPoint(c)) || targets.contains(y(ProjPoint(c)))) continue;
    cs = c;
  }
  for (int k = 0; !ct; ++k) {
    const Scalar c = sample_point(k);
    if (!targets.contains(ProjPoint(c))) ct = c;
  }
  const Mobius sigma = chart(*cs), tau = chart(*ct);
  const RationalMap g = compose(tau.inverse(), compose(y, sigma));
  const auto loci = to_chart(o, sigma);
  const PointSet t = image(targets, tau.inverse());

  std::vector<RamifiedLocus> out;
  for (const auto& [r, mult] : factor_univariate(t.finite).factors) {
    const Poly h = homogenize(r, g.num(), g.den(), r.degree());
    std::set<Nu> values;
    for (const auto& part : squarefree_parts(h)) {
      Poly rest = part.factor;
      for (const auto& l : loci) {
        const Poly common = gcd(rest, l.points);
        if (common.degree() > 0) {
          values.insert(l.nu.times(part.multiplicity));
          rest = Poly::exact_div(rest, common);
        }
      }
      if (rest.degree() > 0) values.insert(Nu(part.multiplicity));
    }
    if (values.size() != 1)
      throw std::domain_error("induced orbifold: ramification values disagree over " + describe(r, tau));
    const Nu v = *values.begin();
    if (v != Nu(1)) {
      PointSet gen;
      gen.finite = r;
      out.push_back({image(gen, tau), v});
    }
  }
  Orbifold result(out);
  const auto cert = is_covering(y, o, result);
  if (!cert.covering) throw std::domain_error("induced orbifold: map is not a covering (" + cert.failure + ")");
  return result;
}

std::optional<Orbifold> infer_canonical_orbifold(const RationalMap& f, int orbit_budget) {
  if (f.degree() < 2) throw std::invalid_argument("infer_canonical_orbifold: degree must be at least 2");
  for (int k = 0; k < 64; ++k) {
    const Scalar c = sample_point(k);
    if (local_degree(f, ProjPoint(c)) != 1) continue;
    const Mobius sigma = chart(c);
    const RationalMap g = conjugate(f, sigma);
    // Postcritical closure; a point reaching the chart's infinity means c is
    // postcritical, and a different chart is tried.
    Poly post = Poly::one();
    Poly frontier = squarefree_kernel(wronskian(g));
    bool restart = false, closed = false;
    for (int step = 0; step < orbit_budget; ++step) {
      if (gcd(frontier, g.den()).degree() > 0) {
        restart = true;
        break;
      }
      const Poly img = squarefree_kernel(norm_polynomial(frontier, g.num(), g.den()));
      const Poly fresh = Poly::exact_div(img, gcd(img, post)).monic();
      post = lcm(post, img);
      if (fresh.degree() <= 0) {
        closed = true;
        break;
      }
      frontier = fresh;
    }
    if (restart) continue;
    if (!closed) return std::nullopt;

    std::vector<Poly> pieces;
    for (const auto& [q, m] : factor_univariate(post).factors) pieces.push_back(q);
    const std::size_t n = pieces.size();
    // Preimage data: for each piece, (source piece or -1 outside, local degree).
    std::vector<std::vector<std::pair<int, int>>> pre(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Poly h = homogenize(pieces[j], g.num(), g.den(), pieces[j].degree());
      for (const auto& part : squarefree_parts(h)) {
        Poly rest = part.factor;
        for (std::size_t i = 0; i < n; ++i) {
          const Poly common = gcd(rest, pieces[i]);
          if (common.degree() > 0) {
            pre[j].emplace_back(static_cast<int>(i), part.multiplicity);
            rest = Poly::exact_div(rest, common);
          }
        }
        if (rest.degree() > 0) pre[j].emplace_back(-1, part.multiplicity);
      }
    }
    std::vector<Nu> nu(n, Nu(1));
    auto pass = [&]() {
      std::vector<Nu> next(n, Nu(1));
      for (std::size_t j = 0; j < n; ++j) {
        Nu v = nu[j];
        for (const auto& [i, e] : pre[j]) v = Nu::lcm(v, i < 0 ? Nu(e) : nu[i].times(e));
        next[j] = v;
      }
      const bool changed = next != nu;
      nu = std::move(next);
      return changed;
    };
    for (std::size_t it = 0; it <= n; ++it) pass();
    std::vector<Nu> early = nu;
    for (std::size_t it = 0; it <= n; ++it) pass();
    for (std::size_t j = 0; j < n; ++j)
      if (nu[j] != early[j]) nu[j] = Nu::infinity();
    for (std::size_t round = 0; round < 4 * (n + 1); ++round) {
      const std::vector<Nu> before = nu;
      if (!pass()) break;
      for (std::size_t j = 0; j < n; ++j)
        if (nu[j] != before[j]) nu[j] = Nu::infinity();
    }

    std::vector<RamifiedLocus> loci;
    for (std::size_t j = 0; j < n; ++j) {
      if (nu[j] == Nu(1)) continue;
      PointSet gen;
      gen.finite = pieces[j];
      loci.push_back({image(gen, sigma), nu[j]});
    }
    Orbifold result(loci);
    if (euler_char(result) != 0) return std::nullopt;
    const auto cert = is_covering(f, result, result);
    if (!cert.covering) throw std::logic_error("canonical orbifold is not a covering: " + cert.failure);
    return result;
  }
  return std::nullopt;
}

}  // namespace ratdyn
