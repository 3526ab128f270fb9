#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace catkit {

using Integer = mpz_class;

// GMP keeps mpq values canonical (lowest terms, positive denominator, 0 = 0/1)
// as long as they are built through canonicalize() or arithmetic.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (decimal integers, q != 0) into a canonical
/// rational. Throws FormatError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

inline Integer factorial(unsigned long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace catkit
