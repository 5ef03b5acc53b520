#ifndef RATDYN_LATTES_HPP
#define RATDYN_LATTES_HPP

#include <string>
#include <vector>

#include "ratdyn/numeric.hpp"
#include "ratdyn/orbifold.hpp"
#include "ratdyn/poly.hpp"
#include "ratdyn/ratmap.hpp"

namespace ratdyn {

/// y^2 = x^3 + a x + b with 4a^3 + 27b^2 != 0.
class EllipticCurve {
 public:
  EllipticCurve(Scalar a, Scalar b);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  /// x^3 + a x + b.
  Poly cubic() const;
  Scalar discriminant() const { return 4 * a_ * a_ * a_ + 27 * b_ * b_; }
  std::string to_string() const;

  friend bool operator==(const EllipticCurve& p, const EllipticCurve& q) { return p.a_ == q.a_ && p.b_ == q.b_; }

 private:
  Scalar a_, b_;
};

/// Entries 1..n of the division polynomial sequence as polynomials in x:
/// odd n give psi_n, even n give psi_n / y (so entry 2 is the constant 2).
/// Element k-1 of the result is entry k.
std::vector<Poly> division_polynomials(const EllipticCurve& e, int n);

/// The (2,2,2,2) orbifold of a curve: roots of the cubic and infinity, nu = 2.
Orbifold lattes_orbifold(const EllipticCurve& e);

struct LattesMap {
  RationalMap map;
  EllipticCurve curve;
  int scale;  // n
  Orbifold orb;
  int ell = 2;
};

/// x([n]P) = x - psi_{n-1} psi_{n+1} / psi_n^2, degree n^2. The covering
/// property against lattes_orbifold is checked; failure throws std::logic_error.
LattesMap multiplication_map(const EllipticCurve& e, int n);

struct IsogenyData {
  EllipticCurve source, target;
  Poly kernel;  // monic; x-coordinates of the nonzero kernel points, up to sign
  RationalMap xmap;
  int degree;
};

/// Velu isogeny with the given kernel polynomial: x - x0 for a rational
/// 2-torsion point, a monic polynomial of degree d whose roots form a cyclic
/// subgroup of order 2d+1 up to sign, or 1 for the identity. Throws
/// std::invalid_argument when the kernel is not a torsion subgroup.
IsogenyData velu_isogeny(const EllipticCurve& e, const Poly& kernel);

/// The isogeny X on iso.target with X o iso.xmap = [n] on iso.source, found by
/// solving for the outer factor. The trivial chain (degree 1 or n^2) is
/// rejected with std::invalid_argument; an inconsistent system throws
/// std::domain_error.
IsogenyData dual_isogeny(const IsogenyData& iso, int n);

struct MutualPair {
  LattesMap a_source;  // A_{m,E}
  LattesMap a_target;  // A_{m,E'}
  RationalMap x, y;    // X o Y = A_{n,E}
  IsogenyData isogeny, dual;
  Orbifold induced;  // image of the orbifold of A_{m,E} under Y
};

/// Y o A_{m,E} = A_{m,E'} o Y, X o A_{m,E'} = A_{m,E} o X and X o Y = A_{n,E},
/// each checked exactly (std::logic_error on failure). Needs a rational
/// n-torsion kernel on E (std::domain_error otherwise).
MutualPair build_mutual_pair(const EllipticCurve& e, int n, int m);

/// T_n, n >= 1.
RationalMap chebyshev(int n);
/// z^n for n >= 2, 1/z^|n| for n <= -2.
RationalMap power_map(int n);

struct MultiplierCheck {
  std::string point;  // locus polynomial or "inf"
  std::string residue;
  bool ok;
};

struct MultiplierReport {
  bool applicable = false;
  std::string reason;
  std::vector<MultiplierCheck> checks;
  bool holds() const;
};

/// For odd scale n: the derivative of the map is n^2 modulo every irreducible
/// factor of the cubic, and the multiplier at infinity is n^2.
MultiplierReport check_multiplier_formula(const LattesMap& l);

}  // namespace ratdyn

#endif  // RATDYN_LATTES_HPP
