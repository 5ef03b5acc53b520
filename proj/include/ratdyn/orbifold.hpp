#ifndef RATDYN_ORBIFOLD_HPP
#define RATDYN_ORBIFOLD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratdyn/numeric.hpp"
#include "ratdyn/poly.hpp"
#include "ratdyn/ratmap.hpp"

namespace ratdyn {

/// Ramification value: a positive integer or infinity.
class Nu {
 public:
  Nu() = default;
  Nu(long v);  // NOLINT(google-explicit-constructor)
  static Nu infinity() {
    Nu n;
    n.infinite_ = true;
    return n;
  }

  bool is_infinite() const { return infinite_; }
  long value() const;
  /// 1/nu, with 1/infinity = 0.
  Scalar reciprocal() const;
  std::string to_string() const;

  /// nu * k (infinity absorbs; values above 2^40 saturate to infinity).
  Nu times(long k) const;
  static Nu lcm(const Nu& a, const Nu& b);
  /// a divides b (only infinity divides infinity; everything divides infinity).
  static bool divides(const Nu& a, const Nu& b);

  friend bool operator==(const Nu& a, const Nu& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const Nu& a, const Nu& b) { return !(a == b); }
  friend bool operator<(const Nu& a, const Nu& b);

 private:
  bool infinite_ = false;
  long value_ = 1;
};

/// A Galois-stable finite set of points of the projective line: the roots of a
/// monic squarefree polynomial, plus optionally infinity.
struct PointSet {
  Poly finite = Poly::one();
  bool infinity = false;

  static PointSet of(const ProjPoint& p);
  /// Roots of the squarefree kernel of p.
  static PointSet roots(const Poly& p);

  bool empty() const { return finite.degree() <= 0 && !infinity; }
  int size() const { return std::max(finite.degree(), 0) + (infinity ? 1 : 0); }
  bool contains(const ProjPoint& p) const;
  bool contains(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.infinity == b.infinity && a.finite == b.finite;
  }
  std::string to_string() const;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
/// mu(S).
PointSet image(const PointSet& s, const Mobius& mu);
/// f(S) as a set.
PointSet image(const PointSet& s, const RationalMap& f);

/// Singular points given by the roots of a squarefree polynomial (or the
/// marker for infinity), all with the same ramification value >= 2.
struct RamifiedLocus {
  PointSet points;
  Nu nu;
};

class Orbifold {
 public:
  Orbifold() = default;
  /// Validates (squarefree, pairwise disjoint, nu >= 2) and canonicalizes:
  /// loci with equal nu are merged, infinity is kept as its own locus, and the
  /// result is ordered by nu. Throws std::invalid_argument when malformed.
  explicit Orbifold(const std::vector<RamifiedLocus>& loci);
  static Orbifold from_points(const std::vector<std::pair<ProjPoint, Nu>>& points);

  const std::vector<RamifiedLocus>& loci() const { return loci_; }
  bool empty() const { return loci_.empty(); }
  Nu nu_at(const ProjPoint& z) const;
  /// Union of all singular points.
  PointSet singular_points() const;
  /// Multiset of nu values, one per point, ascending with infinity last.
  std::vector<Nu> signature() const;
  std::string signature_string() const;
  std::string to_string() const;

  friend bool operator==(const Orbifold& a, const Orbifold& b);

 private:
  std::vector<RamifiedLocus> loci_;
};

/// 2 + sum over singular points of (1/nu - 1).
Scalar euler_char(const Orbifold& o);
Scalar euler_char(const std::vector<Nu>& signature);

struct CoveringCertificate {
  bool covering = false;
  std::vector<std::string> matches;  // one line per matched component
  std::string failure;               // first violated condition, if any
};

/// Checks nu2(f(z)) = nu1(z) deg_z f at every point, exactly.
CoveringCertificate is_covering(const RationalMap& f, const Orbifold& o1, const Orbifold& o2);

/// chi(O1) = deg f * chi(O2), evaluated only when f is a covering.
bool riemann_hurwitz_check(const RationalMap& f, const Orbifold& o1, const Orbifold& o2);

/// The orbifold O* with nu*(Y(z)) = nu(z) deg_z Y. Throws std::domain_error
/// when O is empty or the values disagree on some fibre.
Orbifold induced_orbifold(const Orbifold& o, const RationalMap& y);

inline constexpr int kDefaultOrbitBudget = 16;

/// Smallest nu making f a covering self-map, when the postcritical set closes
/// up within the budget and the Euler characteristic is 0.
std::optional<Orbifold> infer_canonical_orbifold(const RationalMap& f, int orbit_budget = kDefaultOrbitBudget);

}  // namespace ratdyn

#endif  // RATDYN_ORBIFOLD_HPP
