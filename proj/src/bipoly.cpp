#include "ratdyn/bipoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "ratdyn/algebra.hpp"

namespace ratdyn {

BiPoly::BiPoly(std::vector<Poly> rows) : rows_(std::move(rows)) { trim(); }

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::from_x(const Poly& p) {
  std::vector<Poly> rows;
  rows.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) rows.push_back(Poly::constant(c));
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::from_y(const Poly& p) { return BiPoly(std::vector<Poly>{p}); }

BiPoly BiPoly::monomial(const Scalar& c, int i, int j) {
  std::vector<Poly> rows(static_cast<std::size_t>(i) + 1);
  rows[i] = Poly::monomial(c, j);
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::outer(const Poly& p, const Poly& q) {
  std::vector<Poly> rows;
  rows.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) rows.push_back(q * c);
  return BiPoly(std::move(rows));
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (int i = 0; i <= degree_x(); ++i)
    if (!rows_[i].is_zero()) d = std::max(d, i + rows_[i].degree());
  return d;
}

Poly BiPoly::row(int i) const {
  if (i < 0 || i > degree_x()) return {};
  return rows_[i];
}

const Poly& BiPoly::leading_x() const {
  if (rows_.empty()) throw std::domain_error("leading coefficient of the zero bivariate polynomial");
  return rows_.back();
}

Poly BiPoly::eval_y(const Scalar& y0) const {
  std::vector<Scalar> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i](y0);
  return Poly(std::move(c));
}

Poly BiPoly::eval_x(const Scalar& x0) const {
  Poly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

BiPoly BiPoly::swap_xy() const {
  const int dy = degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<Scalar>> cols(static_cast<std::size_t>(dy) + 1, std::vector<Scalar>(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (int j = 0; j <= rows_[i].degree(); ++j) cols[j][i] = rows_[i].coefficients()[j];
  std::vector<Poly> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.emplace_back(std::move(c));
  return BiPoly(std::move(out));
}

BiPoly BiPoly::shift_y(const Scalar& c) const {
  std::vector<Poly> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.shift(c));
  return BiPoly(std::move(out));
}

BiPoly BiPoly::derivative_x() const {
  if (rows_.size() <= 1) return {};
  std::vector<Poly> out(rows_.size() - 1);
  for (std::size_t i = 1; i < rows_.size(); ++i) out[i - 1] = rows_[i] * Scalar(static_cast<long>(i));
  return BiPoly(std::move(out));
}

Poly BiPoly::content_x() const {
  if (rows_.empty()) throw std::domain_error("content of the zero bivariate polynomial");
  Poly g;
  for (const auto& r : rows_) {
    if (r.is_zero()) continue;
    g = g.is_zero() ? r.monic() : gcd(g, r);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly BiPoly::divide_y(const Poly& c) const {
  std::vector<Poly> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(Poly::exact_div(r, c));
  return BiPoly(std::move(out));
}

const Scalar& BiPoly::leading_coefficient() const { return leading_x().leading(); }

BiPoly BiPoly::normalized() const {
  if (is_zero()) return {};
  return *this * (1 / leading_coefficient());
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) {
      if (b.rows_[j].is_zero()) continue;
      out[i + j] += a.rows_[i] * b.rows_[j];
    }
  }
  return BiPoly(std::move(out));
}

BiPoly operator*(const BiPoly& a, const Scalar& c) {
  if (c == 0) return {};
  std::vector<Poly> out = a.rows_;
  for (auto& r : out) r *= c;
  return BiPoly(std::move(out));
}

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly result = from_y(Poly::constant(1));
  BiPoly base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

bool BiPoly::divide(const BiPoly& a, const BiPoly& b, BiPoly& quotient) {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  quotient = BiPoly();
  if (a.is_zero()) return true;
  if (a.degree_x() < b.degree_x() || a.degree_y() < b.degree_y()) return false;
  const int db = b.degree_x();
  std::vector<Poly> q(static_cast<std::size_t>(a.degree_x() - db) + 1);
  std::vector<Poly> r = a.rows_;
  const Poly& lb = b.rows_.back();
  for (int i = a.degree_x(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    auto [t, rem] = Poly::divmod(r[i], lb);
    if (!rem.is_zero()) return false;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j)
      if (!b.rows_[j].is_zero()) r[i - db + j] -= t * b.rows_[j];
  }
  for (int i = 0; i < db; ++i)
    if (!r[i].is_zero()) return false;
  quotient = BiPoly(std::move(q));
  return true;
}

std::string BiPoly::to_string(std::string_view x, std::string_view y) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree_x(); i >= 0; --i) {
    const Poly& r = rows_[i];
    for (int j = r.degree(); j >= 0; --j) {
      const Scalar& c = r.coefficients()[j];
      if (c == 0) continue;
      const Scalar mag = abs(c);
      if (c < 0)
        os << "-";
      else if (!first)
        os << "+";
      first = false;
      std::vector<std::string> parts;
      if (mag != 1 || (i == 0 && j == 0)) parts.push_back(ratdyn::to_string(mag));
      if (i > 0) parts.push_back(std::string(x) + (i > 1 ? "^" + std::to_string(i) : ""));
      if (j > 0) parts.push_back(std::string(y) + (j > 1 ? "^" + std::to_string(j) : ""));
      for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    }
  }
  return os.str();
}

bool BiPoly::less(const BiPoly& a, const BiPoly& b) {
  if (a.degree_x() != b.degree_x()) return a.degree_x() < b.degree_x();
  for (int i = a.degree_x(); i >= 0; --i) {
    if (a.rows_[i] != b.rows_[i]) return Poly::less(a.rows_[i], b.rows_[i]);
  }
  return false;
}

BiPoly cross_difference(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2) {
  return BiPoly::outer(n1, d2) - BiPoly::outer(d1, n2);
}

namespace {

// Deterministic sample points 0, 1, -1, 2, -2, ...
Scalar sample_point(int k) {
  const long m = (k + 1) / 2;
  return Scalar(k % 2 == 1 ? m : -m);
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Poly ca = a.content_x();
  const Poly cb = b.content_x();
  const Poly c = gcd(ca, cb);
  const BiPoly ap = a.divide_y(ca);
  const BiPoly bp = b.divide_y(cb);
  if (ap.degree_x() == 0 || bp.degree_x() == 0) return BiPoly::from_y(c);
  const Poly ell = gcd(ap.leading_x(), bp.leading_x());
  const int needed = std::min(ap.degree_y(), bp.degree_y()) + ell.degree() + 1;

  int best = INT_MAX;
  std::vector<Scalar> xs;
  std::vector<Poly> images;
  for (int k = 0; k < 100000; ++k) {
    const Scalar y0 = sample_point(k);
    const Scalar l0 = ell(y0);
    if (ap.leading_x()(y0) == 0 || bp.leading_x()(y0) == 0) continue;
    const Poly g = gcd(ap.eval_y(y0), bp.eval_y(y0));
    if (g.degree() == 0) return BiPoly::from_y(c);
    if (g.degree() > best) continue;
    if (g.degree() < best) {
      best = g.degree();
      xs.clear();
      images.clear();
    }
    xs.push_back(y0);
    images.push_back(g * l0);
    if (static_cast<int>(xs.size()) < needed) continue;
    // Interpolate each x-coefficient through the collected specializations.
    std::vector<Poly> rows(static_cast<std::size_t>(best) + 1);
    for (int i = 0; i <= best; ++i) {
      std::vector<Scalar> ys;
      ys.reserve(images.size());
      for (const auto& im : images) ys.push_back(im.coeff(i));
      rows[i] = interpolate(xs, ys);
    }
    BiPoly h(std::move(rows));
    h = h.divide_y(h.content_x());
    BiPoly q;
    if (BiPoly::divide(ap, h, q) && BiPoly::divide(bp, h, q)) return (h * BiPoly::from_y(c)).normalized();
  }
  throw std::runtime_error("bivariate gcd failed to converge");
}

}  // namespace ratdyn
