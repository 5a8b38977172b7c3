#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extactica/mpoly.hpp"
#include "extactica/vector_field.hpp"

namespace extactica {

/// Dense row-major matrix of polynomials over one variable list.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const VariableList& vars);
  PolyMatrix(std::vector<std::vector<MPoly>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VariableList& variables() const { return vars_; }
  MPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const MPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  VariableList vars_;
  std::vector<MPoly> data_;
};

/// Ordered basis of a finite-dimensional space of polynomials. The order is
/// part of the identity: it fixes the sign of every determinant built on it.
class LinearSystem {
 public:
  /// Throws DomainError if the basis is empty or linearly dependent over Q.
  explicit LinearSystem(std::vector<MPoly> basis);

  const std::vector<MPoly>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  /// Common homogeneous degree, or nullopt for inhomogeneous systems.
  std::optional<int> degree() const { return degree_; }

 private:
  std::vector<MPoly> basis_;
  std::optional<int> degree_;
};

/// All monomials of degree n in `vars`, lexicographically descending in the
/// exponent vector: n = 1 gives (x, y, z), n = 2 gives
/// (x^2, xy, xz, y^2, yz, z^2).
LinearSystem monomial_basis(int n, const VariableList& vars);

/// rows x dim matrix whose i-th row is X^i applied to the basis.
PolyMatrix wronskian_matrix(const VectorField& field, const LinearSystem& system, std::size_t rows);

/// Exact determinant (Leibniz sign convention). Zero rows or columns short
/// circuit; dimension <= 4 uses cofactor expansion, larger ones Bareiss.
MPoly determinant(const PolyMatrix& m);
/// Fraction-free Bareiss elimination, any size.
MPoly bareiss_determinant(const PolyMatrix& m);
/// Laplace expansion along the first row, any size.
MPoly cofactor_determinant(const PolyMatrix& m);

struct ExtacticReport {
  MPoly polynomial;
  LinearSystem system;
  /// For homogeneous systems under projective fields: sum of row degrees,
  /// exactly the degree of a nonzero parameter-free result. Otherwise an
  /// upper bound.
  std::int64_t expected_degree = 0;
  bool vanished = false;
  std::vector<int> row_degrees;
};

/// E_n(X): the extactic of the degree-n monomial system.
ExtacticReport extactic(const VectorField& field, int n);
/// E(X, V) for an arbitrary linear system.
ExtacticReport extactic_system(const VectorField& field, const LinearSystem& system);

/// (d(n^4 + 6n^3 + 11n^2 + 6n) - n^4 - 2n^3 + n^2 + 2n) / 8.
std::int64_t expected_degree(std::int64_t d, std::int64_t n);

struct IdealGenerator {
  std::vector<int> orders;  // k_1 < ... < k_l
  MPoly determinant;
};

/// sigma_(k_1..k_l) = det [X^{k_i}(v_j)] for all 0 <= k_1 < ... < k_l <= max_order,
/// l = dim V, in lexicographic order of the index tuples.
std::vector<IdealGenerator> extactic_ideal_generators(const VectorField& field, const LinearSystem& system,
                                                      int max_order);

/// Contact of s with the field at p, searched up to `cap`: the least k with
/// X^k(s)(p) != 0, or no value (flat up to cap).
struct ContactOrder {
  std::optional<int> value;
  int cap = 0;
  bool flat() const { return !value.has_value(); }
};

ContactOrder contact_order(const MPoly& s, const VectorField& field, const std::map<std::string, Rational>& point,
                           int cap);

/// Default cap: 4 * dim V.
inline int default_contact_cap(std::size_t dim) { return static_cast<int>(4 * dim); }

}  // namespace extactica
