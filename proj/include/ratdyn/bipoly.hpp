#ifndef RATDYN_BIPOLY_HPP
#define RATDYN_BIPOLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ratdyn/numeric.hpp"
#include "ratdyn/poly.hpp"

namespace ratdyn {

/// Dense polynomial in x and y with rational coefficients, stored as a
/// sequence of polynomials in y indexed by the power of x. Trailing zero rows
/// are trimmed; each row is a trimmed Poly, so columns are trimmed as well.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> rows);

  /// p(x), constant in y.
  static BiPoly from_x(const Poly& p);
  /// p(y), constant in x.
  static BiPoly from_y(const Poly& p);
  static BiPoly monomial(const Scalar& c, int i, int j);
  static BiPoly one() { return monomial(1, 0, 0); }
  /// p(x) q(y).
  static BiPoly outer(const Poly& p, const Poly& q);

  bool is_zero() const { return rows_.empty(); }
  int degree_x() const { return static_cast<int>(rows_.size()) - 1; }
  int degree_y() const;
  int total_degree() const;
  const std::vector<Poly>& rows() const { return rows_; }
  /// Coefficient of x^i as a polynomial in y (zero outside the range).
  Poly row(int i) const;
  Scalar coeff(int i, int j) const { return row(i).coeff(j); }

  /// Leading coefficient in x, a polynomial in y.
  const Poly& leading_x() const;

  /// F(x, y0) as a polynomial in x.
  Poly eval_y(const Scalar& y0) const;
  /// F(x0, y) as a polynomial in y.
  Poly eval_x(const Scalar& x0) const;
  /// F(y, x).
  BiPoly swap_xy() const;
  /// F(x, y + c).
  BiPoly shift_y(const Scalar& c) const;
  BiPoly derivative_x() const;

  /// Monic gcd of the rows (the content with respect to x).
  Poly content_x() const;
  /// Divides every row by a polynomial in y; throws if inexact.
  BiPoly divide_y(const Poly& c) const;

  /// Scales so the leading coefficient (highest x power, then highest y power) is 1.
  BiPoly normalized() const;
  const Scalar& leading_coefficient() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const Scalar& c);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly pow(unsigned k) const;

  /// Exact division in Q[x, y]; returns false if b does not divide a.
  static bool divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient);

  std::string to_string(std::string_view x = "x", std::string_view y = "y") const;
  static bool less(const BiPoly& a, const BiPoly& b);

 private:
  void trim();
  std::vector<Poly> rows_;
};

/// Bivariate numerator of N1(x) D2(y) - N2(y) D1(x).
BiPoly cross_difference(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2);

/// Monic-normalized gcd in Q[x, y]; both zero is rejected.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace ratdyn

#endif  // RATDYN_BIPOLY_HPP
