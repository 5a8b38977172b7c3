#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "extactica/extactic.hpp"
#include "extactica/mpoly.hpp"
#include "extactica/roots.hpp"
#include "extactica/vector_field.hpp"

namespace extactica {

/// Certificate for X(F) = L * F.
struct Cofactor {
  MPoly curve;     // integer-primitive, positive leading coefficient
  MPoly cofactor;  // zero when not invariant
  bool invariant = false;
};

/// Throws DomainError when F = 0.
Cofactor invariance_cofactor(const VectorField& field, const MPoly& curve);

/// True iff `curve` divides E_n(X) (vacuously true when E_n vanishes).
/// Throws DomainError if the curve is not homogeneous or deg > n.
bool factor_containment(const VectorField& field, const MPoly& curve, int n);

/// Smallest d <= d_max with E_d(X) = 0.
std::optional<int> first_integral_degree(const VectorField& field, int d_max);

struct LinearFactor {
  MPoly form;
  int multiplicity = 0;
};

/// Rational linear forms dividing a nonzero homogeneous P in three
/// variables, with multiplicities. Forms are normalized and sorted by number
/// of terms, then by coefficient vector in descending lexicographic order.
std::vector<LinearFactor> rational_linear_factors(const MPoly& p);

/// Invariant lines among the rational factors of E_1(X). Throws DomainError
/// when E_1 vanishes identically.
std::vector<Cofactor> invariant_lines(const VectorField& field);

/// Invariant rational lines through the projective point p. Throws
/// DomainError when every line through p is invariant.
std::vector<Cofactor> invariant_lines_through_point(const VectorField& field, const std::array<Rational, 3>& point);

std::int64_t solution_count_bound(std::int64_t d, std::int64_t n);
/// Floor of (d(n^3 + 6n^2 + 11n + 6) - n^3 - 2n^2 + n + 2) / 8.
std::int64_t curve_count_bound(std::int64_t d, std::int64_t n);
Rational curve_count_bound_exact(std::int64_t d, std::int64_t n);
/// Floor of d(d + 2) / 2.
std::int64_t jouanolou_bound(std::int64_t d);
Rational jouanolou_bound_exact(std::int64_t d);
std::int64_t field_extension_bound(std::int64_t d, std::int64_t n);

struct CoefficientForm {
  std::array<std::uint32_t, 3> exponents;
  MPoly form;  // over (s, t)
};

struct FamilyReport {
  int n = 1;
  int pencil_degree = 0;
  /// True when E_n(sX + tY) vanishes for all s, t.
  bool identically_zero = false;
  /// Nonzero forms, in grlex-descending order of (alpha, beta, gamma).
  std::vector<CoefficientForm> coefficient_forms;
  MPoly gcd_form;  // zero when identically_zero
  std::vector<ProjectivePair> rational_roots;
  std::int64_t degree_bound = 0;
  std::int64_t form_degree = 0;  // N(N - 1) / 2
};

/// Analysis of E_n(sX + tY). s and t must not clash with field variables.
FamilyReport family_analysis(const VectorField& x, const VectorField& y, int n);

}  // namespace extactica
