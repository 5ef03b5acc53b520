#include "ratdyn/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ratdyn/factor.hpp"
#include "ratdyn/spectrum.hpp"

namespace ratdyn {

namespace {

Scalar sample_point(int k) {
  const long m = (k + 1) / 2;
  return Scalar(k % 2 == 1 ? m : -m);
}

const Mobius kReciprocal(0, 1, 1, 0);

Scalar multiplier_at(const RationalMap& f, const ProjPoint& p) {
  if (p.is_infinity()) return multiplier_at(conjugate(f, kReciprocal), ProjPoint(Scalar(0)));
  const Scalar q = f.den()(p.value());
  return wronskian(f)(p.value()) / (q * q);
}

// Rational points of f tagged with conjugacy-invariant data.
std::map<ProjPoint, std::string> marked_points(const RationalMap& f) {
  std::map<ProjPoint, std::string> tags;
  auto add = [&](const ProjPoint& p, const std::string& t) { tags[p] += t; };
  std::vector<ProjPoint> fixed, crit;
  for (const auto& r : rational_roots(fixed_point_polynomial(f))) fixed.emplace_back(r);
  if (f(ProjPoint::infinity()).is_infinity()) fixed.push_back(ProjPoint::infinity());
  const Poly w = wronskian(f);
  if (!w.is_zero())
    for (const auto& r : rational_roots(w)) crit.emplace_back(r);
  if (local_degree(f, ProjPoint::infinity()) > 1) crit.push_back(ProjPoint::infinity());
  for (const auto& p : fixed) add(p, "f" + to_string(multiplier_at(f, p)) + ";");
  for (const auto& c : crit) {
    add(c, "e" + std::to_string(local_degree(f, c)) + ";");
    add(f(c), "v;");
  }
  if (tags.size() < 3) {
    const RationalMap f2 = compose(f, f);
    for (const auto& r : rational_roots(fixed_point_polynomial(f2))) {
      const ProjPoint p(r);
      if (f(p) != p) add(p, "p" + to_string(multiplier_at(f2, p)) + ";");
    }
  }
  return tags;
}

}  // namespace

BiPoly pencil(const RationalMap& v) { return cross_difference(v.num(), v.den(), v.num(), v.den()).normalized(); }

bool same_up_to_left_mobius(const RationalMap& v1, const RationalMap& v2) {
  return v1.degree() == v2.degree() && pencil(v1) == pencil(v2);
}

std::optional<RationalMap> pencil_map(const BiPoly& g) {
  const int s = g.degree_x();
  if (s < 1 || g.degree_y() != s) return std::nullopt;
  const Poly lead = g.swap_xy().leading_x();
  for (int k = 0; k < 24; ++k) {
    const Poly n = g.eval_y(sample_point(k));
    if (n.is_zero()) continue;
    try {
      RationalMap v(n, lead);
      if (v.degree() != s || v.num().degree() <= v.den().degree()) continue;
      Poly num = v.num() * (1 / v.num().leading());
      const Scalar d0 = v.den()(0);
      if (d0 != 0) num = num - v.den() * (num(0) / d0);
      return RationalMap::from_coprime(num, v.den());
    } catch (const std::domain_error&) {
    }
  }
  return std::nullopt;
}

std::vector<Decomposition> all_decompositions(const RationalMap& a) {
  const int d = a.degree();
  if (d < 2) throw std::invalid_argument("all_decompositions: degree must be at least 2");
  if (d > kDecompositionBudget)
    throw BudgetExceeded("all_decompositions: degree " + std::to_string(d) + " exceeds " +
                         std::to_string(kDecompositionBudget));
  const BiPoly f = cross_difference(a.num(), a.den(), a.num(), a.den());
  const BiPoly diagonal = (BiPoly::from_x(Poly::identity()) - BiPoly::from_y(Poly::identity())).normalized();
  std::vector<std::pair<BiPoly, int>> others;
  bool has_diagonal = false;
  for (const auto& [g, k] : factor_bivariate(f).factors) {
    if (g == diagonal)
      has_diagonal = true;
    else
      others.emplace_back(g, k);
  }
  if (!has_diagonal) throw std::logic_error("x - y does not divide num(A(x) - A(y))");

  std::vector<Decomposition> out;
  std::set<std::string> seen;
  std::function<void(std::size_t, const BiPoly&)> walk = [&](std::size_t i, const BiPoly& g) {
    const int gx = g.degree_x(), gy = g.degree_y();
    if (2 * gx > d || 2 * gy > d) return;
    if (i == others.size()) {
      if (gx != gy || gx < 2 || d % gx != 0) return;
      const auto v = pencil_map(g);
      if (!v) return;
      const std::string key = pencil(*v).to_string();
      if (seen.count(key)) return;
      if (auto u = left_divide(a, *v)) {
        seen.insert(key);
        out.push_back({*u, *v});
      }
      return;
    }
    BiPoly acc = g;
    for (int c = 0; c <= others[i].second; ++c) {
      walk(i + 1, acc);
      acc = acc * others[i].first;
    }
  };
  walk(0, diagonal);
  std::sort(out.begin(), out.end(), [](const Decomposition& x, const Decomposition& y) {
    if (x.inner.degree() != y.inner.degree()) return x.inner.degree() < y.inner.degree();
    return RationalMap::less(x.inner, y.inner);
  });
  return out;
}

RationalMap elementary_transform(const RationalMap& a, const Decomposition& d) {
  if (compose(d.outer, d.inner) != a) throw std::invalid_argument("elementary_transform: U o V != A");
  const RationalMap t = compose(d.inner, d.outer);
  if (compose(t, d.inner) != compose(d.inner, a) || compose(a, d.outer) != compose(d.outer, t))
    throw std::logic_error("elementary_transform: semiconjugacy identities fail");
  return t;
}

ConjugacySearch mobius_conjugacy_search(const RationalMap& a, const RationalMap& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("mobius_conjugacy_search: degrees differ");
  if (a == b) return {Mobius::identity(), true};
  if (a.degree() >= 2 && multiplier_polynomial(a, 1) != multiplier_polynomial(b, 1)) return {std::nullopt, true};
  const auto ta = marked_points(a), tb = marked_points(b);
  if (tb.size() < 3) return {std::nullopt, false};
  std::vector<std::pair<ProjPoint, std::string>> pb(tb.begin(), tb.end());
  // Rarest tags first keep the candidate list short.
  std::map<std::string, int> freq;
  for (const auto& [p, t] : ta) ++freq[t];
  std::stable_sort(pb.begin(), pb.end(), [&](const auto& x, const auto& y) { return freq[x.second] < freq[y.second]; });
  std::vector<ProjPoint> cand[3];
  for (int i = 0; i < 3; ++i)
    for (const auto& [p, t] : ta)
      if (t == pb[i].second) cand[i].push_back(p);
  const Mobius sb = Mobius::to_standard(pb[0].first, pb[1].first, pb[2].first);
  for (const auto& q0 : cand[0])
    for (const auto& q1 : cand[1])
      for (const auto& q2 : cand[2]) {
        if (q0 == q1 || q1 == q2 || q0 == q2) continue;
        const Mobius mu = Mobius::to_standard(q0, q1, q2).inverse().after(sb);
        if (compose(a, mu) == compose(mu, b)) return {mu, true};
      }
  return {std::nullopt, true};
}

std::vector<Decomposition> EquivalenceGraph::chain(int i) const {
  std::vector<Decomposition> out;
  for (int k = i; k >= 0 && nodes[k].via; k = nodes[k].parent) out.push_back(*nodes[k].via);
  std::reverse(out.begin(), out.end());
  return out;
}

EquivalenceGraph explore_equivalence(const RationalMap& a, int depth) {
  if (a.degree() < 2) throw std::invalid_argument("explore_equivalence: degree must be at least 2");
  if (depth < 0) throw std::invalid_argument("explore_equivalence: depth must be nonnegative");
  EquivalenceGraph g;
  g.nodes.push_back({a, multiplier_polynomial(a, 1), multiplier_polynomial(a, 2), -1, std::nullopt, 0, false});
  std::vector<int> frontier{0};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<int> next;
    for (int i : frontier) {
      const RationalMap source = g.nodes[i].map;
      for (const auto& d : all_decompositions(source)) {
        const RationalMap t = elementary_transform(source, d);
        const Poly m1 = multiplier_polynomial(t, 1), m2 = multiplier_polynomial(t, 2);
        int match = -1;
        bool inconclusive = false;
        for (std::size_t j = 0; j < g.nodes.size() && match < 0; ++j) {
          const auto& node = g.nodes[j];
          if (node.m1 != m1 || node.m2 != m2) continue;
          if (node.map == t) {
            match = static_cast<int>(j);
            break;
          }
          const auto found = mobius_conjugacy_search(node.map, t);
          if (found.mu)
            match = static_cast<int>(j);
          else if (!found.conclusive)
            inconclusive = true;
        }
        if (match < 0) {
          if (static_cast<int>(g.nodes.size()) >= kExploreNodeBudget)
            throw BudgetExceeded("explore_equivalence: more than " + std::to_string(kExploreNodeBudget) + " nodes");
          match = static_cast<int>(g.nodes.size());
          g.nodes.push_back({t, m1, m2, i, d, level + 1, inconclusive});
          next.push_back(match);
        }
        const bool spectra = m1 == g.nodes[i].m1 && m2 == g.nodes[i].m2;
        g.edges.push_back({i, match, d, t, spectra, true});
      }
    }
    frontier = std::move(next);
  }
  g.complete = depth > 0 && frontier.empty();
  return g;
}

bool verify_semiconjugacy(const SemiconjugacyTriple& t) { return compose(t.x, t.b) == compose(t.a, t.x); }

bool verify_mutual(const RationalMap& a, const RationalMap& x, const RationalMap& y, const RationalMap& b) {
  if (compose(y, a) != compose(b, y) || compose(x, b) != compose(a, x)) return false;
  const RationalMap xy = compose(x, y);
  if (compose(xy, a) != compose(a, xy)) throw std::logic_error("verify_mutual: X o Y does not commute with A");
  return true;
}

RationalMap luroth_generator(const RationalMap& x, const RationalMap& b) {
  const BiPoly g = gcd(pencil(x), pencil(b));
  if (g.degree_x() <= 1) return RationalMap::identity();
  const auto w = pencil_map(g);
  if (!w || !left_divide(x, *w) || !left_divide(b, *w))
    throw std::logic_error("luroth_generator: degenerate specialization");
  return *w;
}

bool is_primitive(const SemiconjugacyTriple& t) {
  return is_irreducible(cross_difference(t.a.num(), t.a.den(), t.x.num(), t.x.den()));
}

PrimitiveReduction reduce_to_primitive(const SemiconjugacyTriple& t) {
  if (!verify_semiconjugacy(t)) throw std::invalid_argument("reduce_to_primitive: X o B != A o X");
  PrimitiveReduction r{RationalMap::identity(), t.x, t.b, {}};
  while (!is_primitive({t.a, r.x0, r.b0})) {
    const RationalMap w = luroth_generator(r.x0, r.b0);
    if (w.degree() < 2) throw std::logic_error("reduce_to_primitive: reducible curve with a primitive pair");
    const RationalMap xp = *left_divide(r.x0, w), bp = *left_divide(r.b0, w);
    r.chain.push_back({bp, w});
    r.b0 = compose(w, bp);
    r.x0 = xp;
    r.w = compose(w, r.w);
  }
  return r;
}

}  // namespace ratdyn
