#ifndef RATDYN_SPECTRUM_HPP
#define RATDYN_SPECTRUM_HPP

#include <complex>
#include <string>
#include <vector>

#include "ratdyn/poly.hpp"
#include "ratdyn/ratmap.hpp"

namespace ratdyn {

/// Largest d^s accepted by multiplier_polynomial.
inline constexpr long kSpectrumBudget = 4096;

/// Throws BudgetExceeded when d^s > kSpectrumBudget.
void check_spectrum_budget(int d, int s);

/// Monic M_s in w whose roots, with multiplicity, are the multipliers of the
/// d^s + 1 fixed points of A^{o s}. Finite fixed points come from the
/// squarefree parts q^k of num(A^s - z): each contributes the norm of
/// (A^s)' over q raised to k. The chart 1/z supplies infinity. Throws
/// BudgetExceeded when d^s > kSpectrumBudget.
Poly multiplier_polynomial(const RationalMap& a, int s);

/// M_s(A) = M_s(B) for s = 1..S. Throws std::invalid_argument when degrees differ.
bool isospectral(const RationalMap& a, const RationalMap& b, int s_max);

enum class Character { attracting, repelling, indifferent, indeterminate };
std::string to_string(Character c);

/// Character of one fixed point, exact when the multiplier is rational.
struct RootCharacter {
  Character character;
  bool exact;
  std::string multiplier;  // rational, or a decimal approximation "re+im*i"
};

struct FixedPointClass {
  std::string point;  // irreducible fixed-point factor in z, or "inf"
  int multiplicity;
  std::string multiplier_polynomial;  // norm of the multiplier over the factor
  std::vector<RootCharacter> roots;   // one per conjugate fixed point
};

/// Attracting |lambda| < 1, repelling |lambda| > 1, indifferent |lambda| = 1.
/// Irrational multipliers are located numerically with a 64-bit mantissa;
/// each root is certified by an inclusion disk whose radius is computed from
/// the exact residual, and a root whose disk comes within 2^-20 of the unit
/// circle is reported indeterminate.
std::vector<FixedPointClass> classify_fixed_points(const RationalMap& a);

/// Approximate complex roots of a squarefree polynomial (Aberth iteration),
/// each with a certified inclusion radius; the radius is infinite when no
/// certificate was obtained.
struct RootEnclosure {
  std::complex<long double> center;
  long double radius;
};
std::vector<RootEnclosure> enclose_roots(const Poly& p);

}  // namespace ratdyn

#endif  // RATDYN_SPECTRUM_HPP
