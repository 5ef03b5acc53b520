#ifndef RATDYN_RATMAP_HPP
#define RATDYN_RATMAP_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ratdyn/numeric.hpp"
#include "ratdyn/poly.hpp"

namespace ratdyn {

/// A rational point of the projective line: a finite Scalar or infinity.
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(const Scalar& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static ProjPoint infinity() {
    ProjPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinity() const { return infinite_; }
  /// Throws std::domain_error for infinity.
  const Scalar& value() const;

  std::string to_string() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  /// Finite points ascending, infinity last.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  bool infinite_ = false;
  Scalar value_;
};

/// Quotient num/den of coprime polynomials with lc(den) = 1. May be constant.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::one()) {}
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  ProjPoint operator()(const ProjPoint& z) const;
  std::string to_string(std::string_view var = "z") const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

 private:
  Poly num_, den_;
};

/// Non-constant rational map of the projective line, num/den with
/// gcd(num, den) = 1 and the leading coefficient of den equal to 1.
class RationalMap {
 public:
  /// The identity z.
  RationalMap();
  /// Reduces by the gcd and rescales; throws std::domain_error if den is zero
  /// or the quotient is constant.
  RationalMap(Poly num, Poly den);
  explicit RationalMap(Poly poly) : RationalMap(std::move(poly), Poly::one()) {}
  explicit RationalMap(const RationalFunction& f) : RationalMap(f.num(), f.den()) {}

  static RationalMap identity() { return RationalMap(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_polynomial() const { return den_.degree() == 0; }

  ProjPoint operator()(const ProjPoint& z) const;
  RationalFunction as_function() const { return RationalFunction(num_, den_); }

  /// "4*z^3-3*z" or "(z^2+1)/(z)".
  std::string to_string(std::string_view var = "z") const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }
  /// Deterministic total order (degree, then den, then num).
  static bool less(const RationalMap& a, const RationalMap& b);

  /// Builds from an already coprime pair, skipping the gcd.
  static RationalMap from_coprime(Poly num, Poly den);

 private:
  Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalMap& f);

/// mu(z) = (a z + b) / (c z + d) with ad - bc != 0.
class Mobius {
 public:
  Mobius() : a_(1), b_(0), c_(0), d_(1) {}
  Mobius(Scalar a, Scalar b, Scalar c, Scalar d);
  static Mobius identity() { return Mobius(); }
  /// The unique Mobius map sending p0, p1, p2 to 0, 1, infinity.
  static Mobius to_standard(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2);
  /// Returns nullopt if the map has degree other than one.
  static std::optional<Mobius> from_map(const RationalMap& f);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }

  Mobius inverse() const;
  /// this o other.
  Mobius after(const Mobius& other) const;
  ProjPoint operator()(const ProjPoint& z) const;
  RationalMap to_map() const;

  friend bool operator==(const Mobius& x, const Mobius& y) { return x.to_map() == y.to_map(); }

 private:
  Scalar a_, b_, c_, d_;
};

/// U o V, normalized. deg = deg U * deg V.
RationalMap compose(const RationalMap& u, const RationalMap& v);
RationalMap compose(const RationalMap& u, const Mobius& v);
RationalMap compose(const Mobius& u, const RationalMap& v);

/// A^{o s}, s >= 1.
RationalMap iterate(const RationalMap& a, int s);

/// (P'Q - PQ') / Q^2 reduced. The result is constant for affine maps, hence
/// the more general return type.
RationalFunction derivative(const RationalMap& a);

/// mu^{-1} o A o mu.
RationalMap conjugate(const RationalMap& a, const Mobius& mu);

/// P'Q - PQ'.
Poly wronskian(const RationalMap& a);

struct CriticalEntry {
  bool at_infinity = false;
  Poly locus;        // monic squarefree; empty for infinity
  int multiplicity;  // e - 1 at every root of locus
};

/// Finite critical points grouped by multiplicity via the squarefree
/// decomposition of the Wronskian; infinity via the chart w = 1/z.
std::vector<CriticalEntry> critical_divisor(const RationalMap& a);

/// Local degree e of A at a rational point.
int local_degree(const RationalMap& a, const ProjPoint& z);

/// Least (s, k) (by s, then k) with A^{o s} = B^{o k}.
std::optional<std::pair<int, int>> common_iterate(const RationalMap& a, const RationalMap& b, int s_max, int k_max);

/// U with U o V = A if one exists (linear solve in the coefficients of U,
/// verified by composition).
std::optional<RationalMap> left_divide(const RationalMap& a, const RationalMap& v);

/// Numerator of A(z) - z in the finite chart (zeros are finite fixed points).
Poly fixed_point_polynomial(const RationalMap& a);

}  // namespace ratdyn

#endif  // RATDYN_RATMAP_HPP
