#pragma once

#include "extactica/mpoly.hpp"

namespace extactica {

/// Scales p to integer coefficients with gcd 1 and a positive leading
/// coefficient (graded lex). Zero stays zero; nonzero constants become 1.
MPoly normalize(const MPoly& p);

/// Greatest common divisor, normalized as above. Computed by recursive
/// primitive remainder sequences in the last occurring variable, with
/// content extraction over the remaining ones.
/// Throws DomainError when both inputs are zero.
MPoly gcd(const MPoly& p, const MPoly& q);

/// Normalized least common multiple of two nonzero polynomials.
MPoly lcm(const MPoly& p, const MPoly& q);

/// Content of p viewed as a polynomial in `var` (gcd of its coefficients).
MPoly content_in(const MPoly& p, std::size_t var);

/// Product of the distinct irreducible factors of p, normalized.
/// Throws DomainError for p = 0.
MPoly squarefree_part(const MPoly& p);

}  // namespace extactica
