#include "ratdyn/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ratdyn {

Scalar parse_scalar(const std::string& text) {
  Scalar s;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || s.set_str(t, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (s.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  s.canonicalize();
  return s;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(1, 1); }

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Scalar> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Scalar Poly::operator()(const Scalar& z) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Scalar inv = 1 / leading();
  r *= inv;
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::shift(const Scalar& c) const {
  // Taylor shift by repeated synthetic division.
  std::vector<Scalar> v = coeffs_;
  const int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) v[j] += c * v[j + 1];
  return Poly(std::move(v));
}

Poly Poly::reversed(int formal_degree) const {
  if (formal_degree < degree()) throw std::invalid_argument("reversed: formal degree below degree");
  std::vector<Scalar> v(static_cast<std::size_t>(formal_degree) + 1);
  for (int i = 0; i <= degree(); ++i) v[formal_degree - i] = coeffs_[i];
  return Poly(std::move(v));
}

int Poly::trailing_zeros() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  throw std::domain_error("trailing_zeros of the zero polynomial");
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

namespace {

// Scales p to integers: p = ints / den.
void to_integer_form(const std::vector<Scalar>& p, std::vector<Integer>& ints, Integer& den) {
  den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ints.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() == den) {
      ints[i] = p[i].get_num();
    } else {
      Integer q = den / p[i].get_den();
      ints[i] = p[i].get_num() * q;
    }
  }
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> ia, ib;
  Integer da, db;
  to_integer_form(a.coeffs_, ia, da);
  to_integer_form(b.coeffs_, ib, db);
  std::vector<Integer> prod(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  const Integer den = da * db;
  std::vector<Scalar> out(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) {
    out[k] = Scalar(prod[k], den);
    if (den != 1) out[k].canonicalize();
  }
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(1);
  Poly base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Scalar> rem = a.coeffs_;
  const int db = b.degree();
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Scalar inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Scalar q = rem[i] * inv;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs_[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool Poly::divides(const Poly& a) const { return divmod(a, *this).second.is_zero(); }

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[i];
    if (c == 0) continue;
    Scalar mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (i == 0) {
      os << ratdyn::to_string(mag);
      continue;
    }
    if (mag != 1) os << ratdyn::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

bool Poly::less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

IntegerPoly to_primitive_integer(const Poly& p) {
  IntegerPoly out;
  if (p.is_zero()) {
    out.scale = 0;
    return out;
  }
  Integer den;
  to_integer_form(p.coefficients(), out.ints, den);
  Integer g = 0;
  for (const auto& c : out.ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (out.ints.back() < 0) g = -g;
  for (auto& c : out.ints) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  out.scale = Scalar(g, den);
  out.scale.canonicalize();
  return out;
}

Poly from_integers(const std::vector<Integer>& ints) {
  std::vector<Scalar> v(ints.size());
  for (std::size_t i = 0; i < ints.size(); ++i) v[i] = Scalar(ints[i]);
  return Poly(std::move(v));
}

Poly homogenize(const Poly& p, const Poly& num, const Poly& den, int formal_degree) {
  if (p.is_zero()) return {};
  const int n = formal_degree;
  std::vector<Poly> num_pow(static_cast<std::size_t>(n) + 1), den_pow(static_cast<std::size_t>(n) + 1);
  num_pow[0] = Poly::constant(1);
  den_pow[0] = Poly::constant(1);
  for (int i = 1; i <= n; ++i) {
    if (p.degree() >= i) num_pow[i] = num_pow[i - 1] * num;
    den_pow[i] = den_pow[i - 1] * den;
  }
  Poly acc;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    acc += (num_pow[i] * den_pow[n - i]) * p.coeff(i);
  }
  return acc;
}

}  // namespace ratdyn
