#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace extactica {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator, so zero is always 0/1.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "n" or "n/d" with an optional leading sign.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

}  // namespace extactica
