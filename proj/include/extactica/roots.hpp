#pragma once

#include <utility>
#include <vector>

#include "extactica/mpoly.hpp"

namespace extactica {

/// Prime factorization (prime, exponent), ascending. n must be nonzero;
/// the sign is ignored. Trial division followed by Pollard-Brent rho.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of n != 0, ascending.
std::vector<Integer> divisors(const Integer& n);

/// Distinct rational roots of sum coeffs[i] u^i, ascending. Rational-root
/// theorem: candidates p/q with p | trailing and q | leading coefficient.
/// Throws DomainError for the zero polynomial.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// A point (a : b) of the projective line with integer coordinates, gcd 1,
/// and first nonzero coordinate positive.
struct ProjectivePair {
  Integer first;
  Integer second;
  friend bool operator==(const ProjectivePair&, const ProjectivePair&) = default;
};

ProjectivePair make_projective_pair(const Rational& a, const Rational& b);

/// Rational zeros (a : b) of a nonzero binary form in the two variables of
/// `form` (which must have exactly two variables and be homogeneous).
/// Ordered by height, then number of nonzero coordinates, then by
/// descending first coordinate.
std::vector<ProjectivePair> binary_form_roots(const MPoly& form);

}  // namespace extactica
