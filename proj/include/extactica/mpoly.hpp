#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extactica/errors.hpp"
#include "extactica/rational.hpp"

namespace extactica {

using VariableList = std::vector<std::string>;

/// Exponent vector over a polynomial's variable list. Dense storage: a zero
/// entry means the variable does not occur. The total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<std::uint32_t>(num_vars, 0)); }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold in the reverse direction (other | *this).
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order: higher total degree first, ties broken
/// lexicographically with the first declared variable most significant.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in descending graded lexicographic order with no
/// zero coefficients, so two polynomials over the same variable list are
/// equal iff their term vectors are equal. Values are immutable from the
/// outside; all arithmetic returns new polynomials.
class MPoly {
 public:
  /// Zero polynomial over an empty variable list.
  MPoly();
  /// Zero polynomial over `vars`.
  explicit MPoly(VariableList vars);
  /// Canonicalizes `terms` (sort, merge duplicates, drop zeros).
  MPoly(VariableList vars, std::vector<Term> terms);

  static MPoly constant(VariableList vars, const Rational& c);
  static MPoly variable(VariableList vars, std::string_view name);
  static MPoly monomial(VariableList vars, Monomial m, const Rational& c = 1);

  const VariableList& variables() const { return *vars_; }
  std::size_t num_variables() const { return vars_->size(); }
  std::optional<std::size_t> find_variable(std::string_view name) const;
  /// Index of `name`; throws VariableError if undeclared.
  std::size_t variable_index(std::string_view name) const;
  bool same_variables(const MPoly& other) const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in a single variable (by index).
  std::uint32_t degree_in(std::size_t var) const;
  /// Total degree counting only the variables whose indices are listed.
  int degree_in(std::span<const std::size_t> vars) const;
  bool is_homogeneous() const;
  /// Homogeneous with respect to the listed variables only.
  bool is_homogeneous_in(std::span<const std::size_t> vars) const;
  /// First term in graded lex order. Precondition: nonzero.
  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  /// Equality of variable lists and term maps.
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void require_same_variables(const MPoly& other, const char* op) const;
  MPoly(std::shared_ptr<const VariableList> vars, std::vector<Term> terms, bool canonical);

  std::shared_ptr<const VariableList> vars_;
  std::vector<Term> terms_;
};

MPoly add(const MPoly& p, const MPoly& q);
MPoly mul(const MPoly& p, const MPoly& q);
MPoly pow(const MPoly& p, unsigned k);

MPoly partial_derivative(const MPoly& p, std::string_view var);
MPoly partial_derivative(const MPoly& p, std::size_t var);

/// Returns h with p = q*h, or nullopt when q does not divide p.
/// Throws DivisionError when q is zero.
std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q);
/// As try_divide, but non-divisibility is a DivisionError.
MPoly exact_divide(const MPoly& p, const MPoly& q);

/// Exact value at a point; every variable must be assigned.
Rational evaluate(const MPoly& p, const std::map<std::string, Rational>& point);
/// Evaluate with values given in variable order.
Rational evaluate(const MPoly& p, std::span<const Rational> values);

/// Replaces the assigned variables by constants; the variable list is kept.
MPoly substitute(const MPoly& p, const std::map<std::string, Rational>& values);
/// Replaces variable i by images[i]. All images share one variable list,
/// which becomes the variable list of the result.
MPoly compose(const MPoly& p, std::span<const MPoly> images);

/// Re-expresses p over `vars`, which must contain every variable p uses.
MPoly with_variables(const MPoly& p, const VariableList& vars);

/// z^m * p(x/z, ...) for v = z: homogeneous of degree m in all variables.
/// Requires deg p <= m and v absent from p. An undeclared v is appended
/// to the variable list.
MPoly homogenize(const MPoly& p, std::string_view v, int m);
/// Same, counting degrees only over `counted` (other variables are
/// treated as coefficients, e.g. family parameters).
MPoly homogenize(const MPoly& p, std::string_view v, int m, std::span<const std::size_t> counted);

/// Homogeneous component of degree k with respect to `counted`.
MPoly homogeneous_part(const MPoly& p, int k, std::span<const std::size_t> counted);

/// Coefficients of p as a polynomial in variable `var`: result[i] is the
/// coefficient of var^i, expressed over the same variable list.
std::vector<MPoly> coefficients_in(const MPoly& p, std::size_t var);

}  // namespace extactica
