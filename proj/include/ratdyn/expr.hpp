#ifndef RATDYN_EXPR_HPP
#define RATDYN_EXPR_HPP

#include <stdexcept>
#include <string>

#include "ratdyn/lattes.hpp"
#include "ratdyn/orbifold.hpp"
#include "ratdyn/ratmap.hpp"

namespace ratdyn {

/// Longest accepted input text.
inline constexpr std::size_t kMaxExpressionBytes = 64 * 1024;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Grammar (usual precedence, left associative, ^ binds tightest):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | 'z' | '(' expr ')' | 'T(' n ')' | 'pow(' n ')'
///            | 'lattes(' a ',' b ',' n ')'
/// Rational literals are written as quotients, e.g. 1/2*z^2. Throws
/// ParseError for syntax errors, division by zero and constant results.
RationalMap parse_map(const std::string& text);

/// Same grammar without the non-constant requirement.
RationalFunction parse_function(const std::string& text);

/// "(2,2,inf)@{1,-1,inf}": one value per point. A braced entry may also be
/// "poly:" followed by a squarefree polynomial in z (or by its ascending
/// coefficients separated by ';'); it consumes one value per root, and those
/// values must agree.
Orbifold parse_orbifold(const std::string& text);

/// "a,b" with rational a and b.
EllipticCurve parse_curve(const std::string& text);

}  // namespace ratdyn

#endif  // RATDYN_EXPR_HPP
