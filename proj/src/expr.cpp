#include "ratdyn/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "ratdyn/algebra.hpp"

namespace ratdyn {

namespace {

constexpr long kMaxExponent = 4096;

struct Value {
  Poly num, den;
};

Value reduce(Value v) {
  const RationalFunction f(v.num, v.den);
  return {f.num(), f.den()};
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {
    if (text.size() > kMaxExpressionBytes) fail("input longer than 64 KiB", 0);
  }

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", pos_);
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer", start);
    return Integer(s_.substr(start, pos_ - start));
  }

  long small_integer(long lo, long hi) {
    skip();
    const std::size_t start = pos_;
    const bool neg = accept('-');
    const Integer v = neg ? Integer(-integer()) : integer();
    if (v < lo || v > hi) fail("integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", start);
    return v.get_si();
  }

  Scalar rational_literal() {
    skip();
    const bool neg = accept('-');
    Scalar v(integer());
    if (accept('/')) {
      const std::size_t at = pos_;
      const Integer d = integer();
      if (d == 0) fail("division by zero", at);
      v /= Scalar(d);
    }
    return neg ? Scalar(-v) : v;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        const Value r = term();
        v = reduce({v.num * r.den + r.num * v.den, v.den * r.den});
      } else if (accept('-')) {
        const Value r = term();
        v = reduce({v.num * r.den - r.num * v.den, v.den * r.den});
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        const Value r = unary();
        v = reduce({v.num * r.num, v.den * r.den});
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Value r = unary();
        if (r.num.is_zero()) fail("division by zero", at);
        v = reduce({v.num * r.den, v.den * r.num});
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      return {-v.num, v.den};
    }
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    long k = 0;
    if (accept('(')) {
      k = small_integer(-kMaxExponent, kMaxExponent);
      expect(')');
    } else {
      k = small_integer(-kMaxExponent, kMaxExponent);
    }
    if (k < 0) {
      if (base.num.is_zero()) fail("division by zero", at);
      std::swap(base.num, base.den);
      k = -k;
    }
    return reduce({base.num.pow(static_cast<unsigned>(k)), base.den.pow(static_cast<unsigned>(k))});
  }

  Value from_map(const RationalMap& m) { return {m.num(), m.den()}; }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
    const std::size_t at = pos_;
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return {Poly::constant(Scalar(integer())), Poly::one()};
    if (accept_word("z")) return {Poly::identity(), Poly::one()};
    try {
      if (accept_word("T")) {
        expect('(');
        const long n = small_integer(1, kMaxExponent);
        expect(')');
        return from_map(chebyshev(static_cast<int>(n)));
      }
      if (accept_word("pow")) {
        expect('(');
        const long n = small_integer(-kMaxExponent, kMaxExponent);
        expect(')');
        return from_map(power_map(static_cast<int>(n)));
      }
      if (accept_word("lattes")) {
        expect('(');
        const Scalar a = rational_literal();
        expect(',');
        const Scalar b = rational_literal();
        expect(',');
        const long n = small_integer(2, 64);
        expect(')');
        return from_map(multiplication_map(EllipticCurve(a, b), static_cast<int>(n)).map);
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what(), at);
    }
    fail("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Poly parse_polynomial(const std::string& text) {
  if (text.find(';') != std::string::npos) {
    std::vector<Scalar> c;
    std::size_t start = 0;
    for (;;) {
      const std::size_t end = text.find(';', start);
      c.push_back(parse_scalar(trim(text.substr(start, end - start))));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return Poly(c);
  }
  const RationalFunction f = parse_function(text);
  if (f.den().degree() > 0) throw ParseError("locus is not a polynomial", 1, 1);
  return f.num() * (1 / f.den().leading());
}

}  // namespace

RationalFunction parse_function(const std::string& text) {
  Parser p(text);
  const Value v = p.parse();
  return RationalFunction(v.num, v.den);
}

RationalMap parse_map(const std::string& text) {
  const RationalFunction f = parse_function(text);
  if (f.is_constant()) throw ParseError("expression is a constant, not a map", 1, 1);
  return RationalMap(f.num(), f.den());
}

Orbifold parse_orbifold(const std::string& text) {
  const std::string t = trim(text);
  const std::size_t at = t.find('@');
  if (at == std::string::npos || t.front() != '(' || t[at - 1] != ')')
    throw ParseError("orbifold must look like (nu,...)@{point,...}", 1, 1);
  const std::string sig = t.substr(1, at - 2);
  std::string pts = trim(t.substr(at + 1));
  if (pts.size() < 2 || pts.front() != '{' || pts.back() != '}')
    throw ParseError("expected {points} after '@'", 1, static_cast<int>(at) + 2);
  pts = pts.substr(1, pts.size() - 2);
  std::vector<Nu> values;
  for (const auto& v : split_top_level(sig)) {
    if (v == "inf") {
      values.push_back(Nu::infinity());
      continue;
    }
    try {
      const long n = std::stol(v);
      if (std::to_string(n) != v) throw std::invalid_argument(v);
      values.push_back(Nu(n));
    } catch (const std::exception&) {
      throw ParseError("bad ramification value '" + v + "'", 1, 1);
    }
  }
  std::vector<RamifiedLocus> loci;
  std::size_t next = 0;
  auto take = [&](int count, const std::string& entry) {
    if (next + static_cast<std::size_t>(count) > values.size())
      throw ParseError("more points than ramification values at '" + entry + "'", 1, 1);
    const Nu nu = values[next];
    for (int i = 0; i < count; ++i)
      if (values[next + static_cast<std::size_t>(i)] != nu)
        throw ParseError("roots of '" + entry + "' need equal ramification values", 1, 1);
    next += static_cast<std::size_t>(count);
    return nu;
  };
  for (const auto& entry : split_top_level(pts)) {
    PointSet ps;
    if (entry == "inf") {
      ps.infinity = true;
    } else if (entry.rfind("poly:", 0) == 0) {
      const Poly p = parse_polynomial(entry.substr(5));
      if (p.degree() < 1 || !is_squarefree(p)) throw ParseError("locus '" + entry + "' is not squarefree", 1, 1);
      ps.finite = p.monic();
    } else {
      ps = PointSet::of(ProjPoint(parse_scalar(entry)));
    }
    const Nu nu = take(ps.size(), entry);
    if (nu != Nu(1)) loci.push_back({ps, nu});
  }
  if (next != values.size()) throw ParseError("more ramification values than points", 1, 1);
  return Orbifold(loci);
}

EllipticCurve parse_curve(const std::string& text) {
  const auto parts = split_top_level(text);
  if (parts.size() != 2) throw ParseError("curve must be given as a,b", 1, 1);
  return EllipticCurve(parse_scalar(parts[0]), parse_scalar(parts[1]));
}

}  // namespace ratdyn
