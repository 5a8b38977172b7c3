#include "extactica/vector_field.hpp"

#include <algorithm>

namespace extactica {

namespace {

bool contains(const VariableList& list, std::string_view name) {
  return std::find(list.begin(), list.end(), name) != list.end();
}

}  // namespace

VectorField::VectorField(VariableList vars, VariableList params, FieldKind kind,
                         const std::vector<MPoly>& coefficients)
    : vars_(std::move(vars)), params_(std::move(params)), kind_(kind) {
  if (vars_.empty()) throw DomainError("vector field needs at least one variable");
  if (coefficients.size() != vars_.size()) throw DomainError("vector field needs one coefficient per variable");
  ring_ = vars_;
  ring_.insert(ring_.end(), params_.begin(), params_.end());
  for (std::size_t i = 0; i < ring_.size(); ++i)
    for (std::size_t j = i + 1; j < ring_.size(); ++j)
      if (ring_[i] == ring_[j]) throw VariableError("duplicate variable '" + ring_[i] + "'");
  for (std::size_t i = 0; i < vars_.size(); ++i) var_indices_.push_back(i);
  for (const auto& c : coefficients) coeffs_.push_back(lift(c));

  if (kind_ == FieldKind::projective) {
    int common = -1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const MPoly& c = coeffs_[i];
      if (c.is_zero()) continue;
      if (!c.is_homogeneous_in(var_indices_))
        throw DomainError("projective field: coefficient of d/d" + vars_[i] + " is not homogeneous");
      const int d = c.degree_in(var_indices_);
      if (common >= 0 && d != common) throw DomainError("projective field: coefficient degrees differ");
      common = d;
    }
    degree_ = std::max(common, 0);
  }
}

VectorField VectorField::projective(VariableList vars, const std::vector<MPoly>& coefficients, VariableList params) {
  return VectorField(std::move(vars), std::move(params), FieldKind::projective, coefficients);
}

VectorField VectorField::affine(VariableList vars, const std::vector<MPoly>& coefficients, VariableList params) {
  VectorField field(std::move(vars), std::move(params), FieldKind::affine, coefficients);
  field.degree_ = affine_decomposition(field).degree;
  return field;
}

VectorField VectorField::from_parsed(const ParsedField& parsed) {
  std::vector<MPoly> coeffs;
  for (const auto& v : parsed.variables) coeffs.push_back(parsed.coefficients.at(v));
  return parsed.kind == FieldKind::affine ? affine(parsed.variables, coeffs, parsed.parameters)
                                          : projective(parsed.variables, coeffs, parsed.parameters);
}

VectorField VectorField::radial(const VariableList& vars) {
  std::vector<MPoly> coeffs;
  for (const auto& v : vars) coeffs.push_back(MPoly::variable(vars, v));
  return projective(vars, coeffs);
}

bool VectorField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MPoly& c) { return c.is_zero(); });
}

const MPoly& VectorField::coefficient(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return coeffs_[i];
  throw VariableError("field has no variable '" + std::string(var) + "'");
}

MPoly VectorField::lift(const MPoly& f) const {
  if (f.variables() == ring_) return f;
  return with_variables(f, ring_);
}

MPoly lie_derivative(const VectorField& field, const MPoly& f) {
  const MPoly g = field.lift(f);
  MPoly result(field.ring_variables());
  for (std::size_t i = 0; i < field.dimension(); ++i) {
    if (field.coefficients()[i].is_zero() || g.degree_in(i) == 0) continue;
    result += field.coefficients()[i] * partial_derivative(g, i);
  }
  return result;
}

std::vector<MPoly> iterate_lie(const VectorField& field, const MPoly& f, int k) {
  if (k < 0) throw DomainError("iterate_lie: k must be non-negative");
  std::vector<MPoly> out{field.lift(f)};
  for (int i = 0; i < k; ++i) out.push_back(lie_derivative(field, out.back()));
  return out;
}

AffineDecomposition affine_decomposition(const VectorField& field) {
  const auto& idx = field.variable_indices();
  AffineDecomposition dec{field.coefficients(), MPoly(field.ring_variables()), 0};
  int top = -1;
  for (const auto& c : field.coefficients()) top = std::max(top, c.degree_in(idx));
  if (top <= 0) return dec;

  // The top-degree part is g * (x_1, ..., x_n) iff every x_i divides the
  // i-th top component with a common quotient.
  std::vector<MPoly> parts;
  for (const auto& c : field.coefficients()) parts.push_back(homogeneous_part(c, top, idx));
  std::optional<MPoly> g;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const MPoly xi = MPoly::variable(field.ring_variables(), field.variables()[i]);
    auto q = try_divide(parts[i], xi);
    if (!q || q->is_zero() || (g && *q != *g)) {
      g.reset();
      break;
    }
    g = std::move(*q);
  }
  if (!g) {
    dec.degree = top;
    return dec;
  }
  dec.degree = top - 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    dec.a[i] -= *g * MPoly::variable(field.ring_variables(), field.variables()[i]);
  dec.g = std::move(*g);
  return dec;
}

VectorField projectivize(const VectorField& field, std::string_view new_var) {
  if (field.kind() != FieldKind::affine) throw DomainError("projectivize expects an affine field");
  if (contains(field.ring_variables(), new_var))
    throw VariableError("projectivize: variable '" + std::string(new_var) + "' already in use");
  const AffineDecomposition dec = affine_decomposition(field);

  VariableList vars = field.variables();
  vars.emplace_back(new_var);
  VariableList ring = vars;
  ring.insert(ring.end(), field.parameters().begin(), field.parameters().end());
  std::vector<std::size_t> counted(vars.size());
  for (std::size_t i = 0; i < counted.size(); ++i) counted[i] = i;

  std::vector<MPoly> coeffs;
  for (const auto& a : dec.a) coeffs.push_back(homogenize(with_variables(a, ring), new_var, dec.degree, counted));
  coeffs.push_back(-with_variables(dec.g, ring));
  return VectorField::projective(std::move(vars), coeffs, field.parameters());
}

int field_degree(const VectorField& field) { return field.degree(); }

VectorField linear_combination(std::string_view s, const VectorField& x, std::string_view t, const VectorField& y) {
  if (x.kind() != FieldKind::projective || y.kind() != FieldKind::projective)
    throw DomainError("linear_combination expects projective fields");
  if (x.variables() != y.variables()) throw VariableError("linear_combination: fields over different variables");
  if (x.degree() != y.degree()) throw DomainError("linear_combination: fields of different degrees");
  if (s == t) throw VariableError("linear_combination: parameter names must differ");
  for (auto name : {s, t})
    if (contains(x.ring_variables(), name) || contains(y.ring_variables(), name))
      throw VariableError("linear_combination: parameter '" + std::string(name) + "' already in use");

  VariableList params = x.parameters();
  for (const auto& p : y.parameters())
    if (!contains(params, p)) params.push_back(p);
  params.emplace_back(s);
  params.emplace_back(t);
  VariableList ring = x.variables();
  ring.insert(ring.end(), params.begin(), params.end());

  const MPoly sp = MPoly::variable(ring, s);
  const MPoly tp = MPoly::variable(ring, t);
  std::vector<MPoly> coeffs;
  for (std::size_t i = 0; i < x.dimension(); ++i)
    coeffs.push_back(sp * with_variables(x.coefficients()[i], ring) + tp * with_variables(y.coefficients()[i], ring));
  return VectorField::projective(x.variables(), coeffs, params);
}

VectorField specialize(const VectorField& field, const std::map<std::string, Rational>& values) {
  VariableList params;
  for (const auto& p : field.parameters())
    if (!values.count(p)) params.push_back(p);
  for (const auto& [name, value] : values)
    if (!contains(field.parameters(), name)) throw VariableError("specialize: '" + name + "' is not a parameter");
  VariableList ring = field.variables();
  ring.insert(ring.end(), params.begin(), params.end());
  std::vector<MPoly> coeffs;
  for (const auto& c : field.coefficients()) coeffs.push_back(with_variables(substitute(c, values), ring));
  return field.kind() == FieldKind::affine ? VectorField::affine(field.variables(), coeffs, params)
                                           : VectorField::projective(field.variables(), coeffs, params);
}

std::vector<MPoly> singular_minors(const VectorField& field) {
  if (field.dimension() != 3) throw DomainError("singular_minors expects a field in three variables");
  std::vector<MPoly> p;
  for (const auto& v : field.variables()) p.push_back(MPoly::variable(field.ring_variables(), v));
  const auto& c = field.coefficients();
  return {p[0] * c[1] - p[1] * c[0], p[0] * c[2] - p[2] * c[0], p[1] * c[2] - p[2] * c[1]};
}

}  // namespace extactica
