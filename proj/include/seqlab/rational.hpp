#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace seqlab {

// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "a/b" or "a" (decimal integers). Throws FormatError.
Rational parse_rational(std::string_view text);
// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

// num/den in canonical form. den must be nonzero.
inline Rational ratio(unsigned long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Number of significant bits of a positive integer (bit_length(1) == 1).
inline std::size_t bit_length(const BigInt& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace seqlab
