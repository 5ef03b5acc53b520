#ifndef RATDYN_POLY_HPP
#define RATDYN_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratdyn/numeric.hpp"

namespace ratdyn {

/// Dense univariate polynomial with rational coefficients.
///
/// Coefficients are stored by ascending degree and trailing zeros are always
/// trimmed, so the zero polynomial is the empty sequence and `degree()` is -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(std::initializer_list<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, int k);
  static Poly one() { return constant(1); }
  /// The polynomial `z`.
  static Poly identity();
  /// Builds from integer coefficients, ascending degree.
  static Poly from_ints(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of z^i; zero outside the stored range.
  Scalar coeff(int i) const;
  const Scalar& leading() const;

  Scalar operator()(const Scalar& z) const;

  Poly derivative() const;
  Poly monic() const;
  /// p(inner(z)).
  Poly compose(const Poly& inner) const;
  /// p(z + c).
  Poly shift(const Scalar& c) const;
  /// z^n p(1/z) for a formal degree n >= degree().
  Poly reversed(int formal_degree) const;
  /// Largest k with z^k | p (p nonzero).
  int trailing_zeros() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned k) const;

  /// Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient; throws std::domain_error when b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);
  bool divides(const Poly& a) const;

  Poly operator%(const Poly& b) const { return divmod(*this, b).second; }

  /// Human-readable form such as "4*z^3-3*z".
  std::string to_string(std::string_view var = "z") const;

  /// Strict total order used for deterministic output (degree first, then
  /// coefficients from the top).
  static bool less(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Primitive integer representation: p = scale * sum(ints[i] z^i) with the
/// integer content equal to 1 and ints.back() > 0.
struct IntegerPoly {
  Scalar scale;
  std::vector<Integer> ints;
};
IntegerPoly to_primitive_integer(const Poly& p);
Poly from_integers(const std::vector<Integer>& ints);

/// Homogeneous substitution sum_i p_i num^i den^(n-i) with n = formal_degree.
Poly homogenize(const Poly& p, const Poly& num, const Poly& den, int formal_degree);

}  // namespace ratdyn

#endif  // RATDYN_POLY_HPP
