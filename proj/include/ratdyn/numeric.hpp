#ifndef RATDYN_NUMERIC_HPP
#define RATDYN_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratdyn {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

/// Raised when an operation would exceed one of the documented size budgets
/// (degree limits, node limits, iteration limits).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Scalar& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// Parses "p" or "p/q" (optional leading sign) into a canonical Scalar.
Scalar parse_scalar(const std::string& text);

inline Scalar make_scalar(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline bool is_integer(const Scalar& v) { return v.get_den() == 1; }

/// Number of bits of |v| (0 for v == 0).
inline std::size_t bit_length(const Integer& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

Integer binomial(unsigned long n, unsigned long k);

}  // namespace ratdyn

#endif  // RATDYN_NUMERIC_HPP
