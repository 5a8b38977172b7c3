#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "extactica/mpoly.hpp"
#include "extactica/parse.hpp"

namespace extactica {

/// A polynomial vector field acting as a derivation.
///
/// One coefficient per field variable; coefficients live over the ring
/// variables (field variables followed by parameters). Parameters are
/// constants for the derivation. For projective fields every nonzero
/// coefficient is homogeneous of the field's degree in the field variables.
class VectorField {
 public:
  static VectorField projective(VariableList vars, const std::vector<MPoly>& coefficients,
                                VariableList params = {});
  static VectorField affine(VariableList vars, const std::vector<MPoly>& coefficients,
                            VariableList params = {});
  static VectorField from_parsed(const ParsedField& parsed);
  /// x d/dx + y d/dy + ... over `vars`.
  static VectorField radial(const VariableList& vars);

  const VariableList& variables() const { return vars_; }
  const VariableList& parameters() const { return params_; }
  const VariableList& ring_variables() const { return ring_; }
  std::size_t dimension() const { return vars_.size(); }
  FieldKind kind() const { return kind_; }
  int degree() const { return degree_; }
  bool is_zero() const;

  const std::vector<MPoly>& coefficients() const { return coeffs_; }
  const MPoly& coefficient(std::string_view var) const;
  /// Ring indices of the field variables, i.e. 0..dimension()-1.
  const std::vector<std::size_t>& variable_indices() const { return var_indices_; }

  /// Re-expresses f over the ring variables. f may use any subset of them.
  MPoly lift(const MPoly& f) const;

 private:
  VectorField(VariableList vars, VariableList params, FieldKind kind, const std::vector<MPoly>& coefficients);

  VariableList vars_;
  VariableList params_;
  VariableList ring_;
  std::vector<std::size_t> var_indices_;
  FieldKind kind_;
  std::vector<MPoly> coeffs_;
  int degree_ = 0;
};

/// X(f) = sum over variables v of X_v * df/dv.
MPoly lie_derivative(const VectorField& field, const MPoly& f);

/// [f, X(f), X^2(f), ..., X^k(f)].
std::vector<MPoly> iterate_lie(const VectorField& field, const MPoly& f, int k);

/// X = sum a_i d/dx_i + g * (sum x_i d/dx_i) with g homogeneous of degree d
/// and deg a_i <= d, d minimal.
struct AffineDecomposition {
  std::vector<MPoly> a;
  MPoly g;
  int degree = 0;
};

AffineDecomposition affine_decomposition(const VectorField& field);

/// Homogeneous field in one more variable inducing `field` on the chart
/// new_var = 1: coefficients z^d a_i(x/z) for the old variables and -g for
/// the new one.
VectorField projectivize(const VectorField& field, std::string_view new_var);

int field_degree(const VectorField& field);

/// s*X + t*Y with s, t added as parameters.
VectorField linear_combination(std::string_view s, const VectorField& x, std::string_view t,
                               const VectorField& y);

/// Substitutes rational values for some parameters and drops them.
VectorField specialize(const VectorField& field, const std::map<std::string, Rational>& values);

/// The 2x2 minors (01, 02, 12) of [[x, y, z], [X(x), X(y), X(z)]]; their
/// common zeros are the singular points of the induced foliation.
std::vector<MPoly> singular_minors(const VectorField& field);

}  // namespace extactica
