#pragma once

// Exact rationals backed by GMP. mpq_class keeps values canonical
// (positive denominator, coprime terms) after every arithmetic operation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace latround {

using Rational = mpq_class;
using BigInt = mpz_class;

class RationalParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "a/b" or "a" (optional leading sign on a). Rejects b == 0.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);

/// a/b in canonical form. b must be non-zero.
inline Rational ratio(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace latround
