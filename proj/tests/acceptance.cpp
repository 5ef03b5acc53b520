#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "ratdyn/decompose.hpp"
#include "ratdyn/lattes.hpp"
#include "ratdyn/orbifold.hpp"
#include "ratdyn/spectrum.hpp"

using namespace ratdyn;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Outcome&)> body;
};

const EllipticCurve kE(-1, 0);

ProjPoint pt(long v) { return ProjPoint(Scalar(v)); }

Orbifold chebyshev_orbifold() {
  return Orbifold::from_points({{pt(-1), 2}, {pt(1), 2}, {ProjPoint::infinity(), Nu::infinity()}});
}

void euler_characteristics(Outcome& o) {
  const Nu inf = Nu::infinity();
  const std::vector<std::vector<Nu>> sigs = {
      {inf, inf}, {2, 2, inf}, {2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6},
  };
  for (const auto& s : sigs) {
    std::string name;
    for (const auto& v : s) name += (name.empty() ? "" : ",") + v.to_string();
    o.require(euler_char(s) == 0, "chi != 0 for (" + name + ")");
  }
}

void chebyshev_family(Outcome& o) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      const RationalMap tm = chebyshev(m), tn = chebyshev(n), tmn = chebyshev(m * n);
      o.require(compose(tm, tn) == tmn, "T" + std::to_string(m) + " o T" + std::to_string(n));
      o.require(compose(tn, tm) == tmn, "T" + std::to_string(n) + " o T" + std::to_string(m));
    }
  const Mobius neg(-1, 0, 0, 1);
  for (int n = 1; n <= 5; n += 2)
    for (int m = 1; m <= 4; ++m)
      for (int sign : {1, -1}) {
        const RationalMap tm = sign > 0 ? chebyshev(m) : compose(neg, chebyshev(m));
        const RationalMap lhs = compose(neg, compose(chebyshev(n), tm));
        const RationalMap rhs = compose(tm, chebyshev(n));
        o.require(lhs != rhs, "sign obstruction fails at n=" + std::to_string(n) + ", m=" + std::to_string(m));
      }
  const Orbifold orb = chebyshev_orbifold();
  for (int n = 1; n <= 6; ++n)
    o.require(is_covering(chebyshev(n), orb, orb).covering, "T" + std::to_string(n) + " is not a covering");
}

void power_semiconjugacy(Outcome& o) {
  const Scalar a = 2, b = 5;
  const int n = 3, m = 2;
  Scalar coeff = 1;
  for (int i = 0; i < m; ++i) coeff *= a;
  for (int i = 0; i < n - 1; ++i) coeff /= b;
  o.require(coeff == Scalar(4, 25), "coefficient is " + to_string(coeff));
  const RationalMap A(Poly::monomial(a, n)), Y(Poly::monomial(b, m)), B(Poly::monomial(coeff, n));
  o.require(compose(Y, A) == compose(B, Y), "Y o A != B o Y");
}

void lattes_construction(Outcome& o) {
  for (int n : {2, 3, 5})
    o.require(multiplication_map(kE, n).map.degree() == n * n, "deg A_" + std::to_string(n));
  const LattesMap l2 = multiplication_map(kE, 2), l3 = multiplication_map(kE, 3), l6 = multiplication_map(kE, 6);
  o.require(compose(l2.map, l3.map) == l6.map, "A2 o A3 != A6");
  o.require(compose(l3.map, l2.map) == l6.map, "A3 o A2 != A6");
  const Orbifold orb = lattes_orbifold(kE);
  o.require(orb.signature_string() == "(2,2,2,2)", "orbifold " + orb.signature_string());
  for (const auto* l : {&l2, &l3, &l6}) {
    const std::string tag = "A_" + std::to_string(l->scale);
    o.require(is_covering(l->map, orb, orb).covering, tag + " is not a covering");
    o.require(riemann_hurwitz_check(l->map, orb, orb), tag + " fails Riemann-Hurwitz");
  }
}

void tower(Outcome& o) {
  const MutualPair p = build_mutual_pair(kE, 2, 3);
  const RationalMap& a = p.a_source.map;
  const RationalMap& a2 = p.a_target.map;
  o.require(compose(p.y, a) == compose(a2, p.y), "Y o A_3,E != A_3,E' o Y");
  o.require(compose(p.x, a2) == compose(a, p.x), "X o A_3,E' != A_3,E o X");
  o.require(compose(p.x, p.y) == multiplication_map(kE, 2).map, "X o Y != A_2,E");
  o.require(p.x.degree() * p.y.degree() == 4, "deg X * deg Y != 4");
}

void isospectrality(Outcome& o) {
  const MutualPair p = build_mutual_pair(kE, 2, 3);
  const std::size_t expected[] = {10, 82};
  for (int s = 1; s <= 2; ++s) {
    const Poly m_src = multiplier_polynomial(p.a_source.map, s);
    const Poly m_tgt = multiplier_polynomial(p.a_target.map, s);
    const std::string tag = "M_" + std::to_string(s);
    o.require(m_src.degree() == static_cast<int>(expected[s - 1]), tag + " has degree " + std::to_string(m_src.degree()));
    o.require(m_src == m_tgt, tag + " differs");
  }
}

void multiplier_formula(Outcome& o) {
  for (int n : {3, 5}) {
    const MultiplierReport r = check_multiplier_formula(multiplication_map(kE, n));
    const std::string want = std::to_string(n * n);
    o.require(r.applicable, "n=" + std::to_string(n) + " not applicable: " + r.reason);
    int finite = 0;
    for (const auto& c : r.checks) {
      o.require(c.ok && c.residue == want, "residue " + c.residue + " at " + c.point);
      if (c.point != "inf") ++finite;
    }
    o.require(finite == 3, "expected three factors of x^3 - x");
  }
}

void decomposition(Outcome& o) {
  const auto t6 = all_decompositions(chebyshev(6));
  bool t23 = false, t32 = false;
  for (const auto& d : t6) {
    if (same_up_to_left_mobius(d.inner, chebyshev(3)) && d.outer.degree() == 2) t23 = true;
    if (same_up_to_left_mobius(d.inner, chebyshev(2)) && d.outer.degree() == 3) t32 = true;
  }
  o.require(t23, "(T2,T3) missing");
  o.require(t32, "(T3,T2) missing");
  const MutualPair p = build_mutual_pair(kE, 2, 3);
  bool found = false;
  for (const auto& d : all_decompositions(multiplication_map(kE, 2).map)) {
    if (!same_up_to_left_mobius(d.inner, p.y)) continue;
    found = true;
    const std::string sig = induced_orbifold(lattes_orbifold(kE), d.inner).signature_string();
    o.require(sig == "(2,2,2,2)", "induced orbifold " + sig);
  }
  o.require(found, "no decomposition of A_2,E matches Y");
}

void equivalence_spectra(Outcome& o) {
  for (const auto& [name, root] : {std::pair<std::string, RationalMap>{"T6", chebyshev(6)},
                                   std::pair<std::string, RationalMap>{"A_2,E", multiplication_map(kE, 2).map}}) {
    const EquivalenceGraph g = explore_equivalence(root, 3);
    for (const auto& e : g.edges) {
      const RationalMap& from = g.nodes[static_cast<std::size_t>(e.from)].map;
      const std::string tag = name + " edge " + std::to_string(e.from) + "->" + std::to_string(e.to);
      o.require(e.identities_hold, tag + ": identities fail");
      o.require(e.spectra_preserved, tag + ": reported spectra differ");
      for (int s = 1; s <= 2; ++s)
        o.require(multiplier_polynomial(from, s) == multiplier_polynomial(e.target, s),
                  tag + ": M_" + std::to_string(s) + " differs");
    }
    o.require(!g.edges.empty() || g.nodes.size() == 1, name + ": no edges");
  }
}

void primitivity(Outcome& o) {
  const RationalMap sq(Poly::monomial(1, 2));
  o.require(!is_primitive({sq, sq, sq}), "x^2 - y^2 reported irreducible");
  const RationalMap a = multiplication_map(kE, 2).map;
  o.require(is_primitive({a, RationalMap::identity(), a}), "A(x) - y reported reducible");
  const PrimitiveReduction r = reduce_to_primitive({sq, sq, sq});
  o.require(r.x0.degree() == 1, "X0 has degree " + std::to_string(r.x0.degree()));
  o.require(is_primitive({sq, r.x0, r.b0}), "reduced triple is not primitive");
  o.require(verify_semiconjugacy({sq, r.x0, r.b0}), "reduced triple is not a solution");
  const SemiconjugacyTriple base{chebyshev(2), chebyshev(3), chebyshev(2)};
  o.require(verify_semiconjugacy(base) && is_primitive(base), "(T2,T3,T2) is not a primitive solution");
  const SemiconjugacyTriple iter{iterate(base.a, 2), base.x, iterate(base.b, 2)};
  o.require(verify_semiconjugacy(iter), "(T4,T3,T4) is not a solution");
  o.require(is_primitive(iter), "(T4,T3,T4) is not primitive");
}

void canonical_orbifolds(Outcome& o) {
  const Orbifold power = Orbifold::from_points({{pt(0), Nu::infinity()}, {ProjPoint::infinity(), Nu::infinity()}});
  for (int n = 2; n <= 5; ++n) {
    const auto c = infer_canonical_orbifold(power_map(n), 16);
    o.require(c && *c == power, "z^" + std::to_string(n));
  }
  for (int n = 2; n <= 5; ++n) {
    const auto c = infer_canonical_orbifold(chebyshev(n), 16);
    o.require(c && *c == chebyshev_orbifold(), "T" + std::to_string(n));
  }
  const auto l = infer_canonical_orbifold(multiplication_map(kE, 2).map, 16);
  o.require(l && *l == lattes_orbifold(kE), "A_2,E");
  o.require(!infer_canonical_orbifold(RationalMap(Poly::from_ints({1, 0, 1})), 16).has_value(), "z^2+1 not absent");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Euler characteristics of the six signatures", 1, euler_characteristics},
      {2, "Chebyshev composition, sign obstruction, covering", 5, chebyshev_family},
      {3, "power-map semiconjugacy", 1, power_semiconjugacy},
      {4, "Lattes degrees, commutation, covering", 30, lattes_construction},
      {5, "mutual pair tower", 30, tower},
      {6, "isospectrality of A_3,E and A_3,E'", 60, isospectrality},
      {7, "multiplier residues", 10, multiplier_formula},
      {8, "decompositions of T6 and A_2,E", 60, decomposition},
      {9, "equivalence edges preserve M1 and M2", 120, equivalence_spectra},
      {10, "primitivity and reduction", 30, primitivity},
      {11, "canonical orbifold inference", 30, canonical_orbifolds},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& ex) {
      out.ok = false;
      out.note = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs >= c.limit_s) {
      out.ok = false;
      out.note = "time limit exceeded";
    }
    if (!out.ok) ++failed;
    std::printf("criterion %d: %s (%.3f s, limit %.0f s) %s%s%s\n", c.id, out.ok ? "PASS" : "FAIL", secs, c.limit_s,
                c.title.c_str(), out.note.empty() ? "" : ": ", out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
