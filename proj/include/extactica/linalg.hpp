#pragma once

#include <cstddef>
#include <vector>

#include "extactica/rational.hpp"

namespace extactica {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by Gaussian elimination over Q.
std::size_t rank(RationalMatrix m);

/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<Rational>> kernel(RationalMatrix m, std::size_t cols);

/// Determinant over Q (Gaussian elimination).
Rational determinant(RationalMatrix m);

}  // namespace extactica
