#include "extactica/invariants.hpp"

#include <algorithm>
#include <map>

#include "extactica/gcd.hpp"

namespace extactica {

namespace {

void require_plane_field(const VectorField& field) {
  if (field.kind() != FieldKind::projective) throw DomainError("expected a projective field");
  if (field.dimension() != 3) throw DomainError("expected a field in three variables");
  if (!field.parameters().empty()) throw DomainError("field must not have parameters");
}

// Coefficient of each variable in a linear form.
std::vector<Rational> linear_coefficients(const MPoly& form) {
  std::vector<Rational> c(form.num_variables(), 0);
  for (const auto& t : form.terms())
    for (std::size_t i = 0; i < form.num_variables(); ++i)
      if (t.monomial[i] == 1) c[i] = t.coefficient;
  return c;
}

// Fewer terms first, then coefficient vectors in descending lexicographic order.
bool linear_form_before(const MPoly& a, const MPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ca = linear_coefficients(a), cb = linear_coefficients(b);
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end(), std::greater<>());
}

// Rational roots of u -> restriction(u, 1), where restriction is p with
// variable `zero` set to 0 and u = var a / var b.
std::vector<Rational> restriction_roots(const MPoly& p, std::size_t zero, std::size_t a) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()) + 1, 0);
  bool any = false;
  for (const auto& t : p.terms()) {
    if (t.monomial[zero] != 0) continue;
    coeffs[t.monomial[a]] += t.coefficient;
    any = true;
  }
  if (!any) return {};
  return rational_roots(coeffs);
}

int multiplicity(MPoly p, const MPoly& form) {
  int m = 0;
  while (auto q = try_divide(p, form)) {
    p = std::move(*q);
    ++m;
  }
  return m;
}

}  // namespace

Cofactor invariance_cofactor(const VectorField& field, const MPoly& curve) {
  if (curve.is_zero()) throw DomainError("invariance of the zero polynomial");
  Cofactor out{normalize(field.lift(curve)), MPoly(field.ring_variables()), false};
  if (auto q = try_divide(lie_derivative(field, out.curve), out.curve)) {
    out.cofactor = std::move(*q);
    out.invariant = true;
  }
  return out;
}

bool factor_containment(const VectorField& field, const MPoly& curve, int n) {
  const MPoly f = field.lift(curve);
  if (f.is_zero()) throw DomainError("factor containment of the zero polynomial");
  if (!f.is_homogeneous_in(field.variable_indices())) throw DomainError("curve must be homogeneous");
  if (f.degree_in(field.variable_indices()) > n) throw DomainError("curve degree exceeds n");
  const ExtacticReport e = extactic(field, n);
  return e.vanished || try_divide(e.polynomial, f).has_value();
}

std::optional<int> first_integral_degree(const VectorField& field, int d_max) {
  if (d_max < 1) throw DomainError("d_max must be >= 1");
  for (int d = 1; d <= d_max; ++d)
    if (extactic(field, d).vanished) return d;
  return std::nullopt;
}

std::vector<LinearFactor> rational_linear_factors(const MPoly& p) {
  if (p.is_zero()) throw DomainError("linear factors of the zero polynomial");
  if (p.num_variables() != 3) throw DomainError("linear factors need exactly three variables");
  if (!p.is_homogeneous()) throw DomainError("linear factors need a homogeneous polynomial");
  const VariableList& vars = p.variables();
  const MPoly x = MPoly::variable(vars, vars[0]);
  const MPoly y = MPoly::variable(vars, vars[1]);
  const MPoly z = MPoly::variable(vars, vars[2]);

  std::vector<MPoly> candidates{x, y, z};
  MPoly rest = p;
  for (const MPoly* v : {&x, &y, &z})
    while (auto q = try_divide(rest, *v)) rest = std::move(*q);

  if (rest.degree() > 0) {
    const MPoly s = squarefree_part(rest);
    // x + b y: roots of s(u, 1, 0) are -b; x + c z: roots of s(u, 0, 1);
    // y + c z: roots of s(0, u, 1).
    const auto bs = restriction_roots(s, 2, 0);
    const auto cs = restriction_roots(s, 1, 0);
    const auto ds = restriction_roots(s, 0, 1);
    for (const auto& rb : bs)
      for (const auto& rc : cs) {
        if (rb == 0 && rc == 0) continue;
        candidates.push_back(normalize(x - rb * y - rc * z));
      }
    for (const auto& rd : ds)
      if (rd != 0) candidates.push_back(normalize(y - rd * z));
  }

  std::vector<LinearFactor> out;
  for (const auto& c : candidates)
    if (int m = multiplicity(p, c); m > 0) out.push_back({c, m});
  std::sort(out.begin(), out.end(),
            [](const LinearFactor& a, const LinearFactor& b) { return linear_form_before(a.form, b.form); });
  return out;
}

std::vector<Cofactor> invariant_lines(const VectorField& field) {
  require_plane_field(field);
  const ExtacticReport e1 = extactic(field, 1);
  if (e1.vanished)
    throw DomainError("E_1 vanishes identically: the field has a first integral of degree 1 "
                      "and every line of a pencil is invariant (see first-integral)");
  std::vector<Cofactor> out;
  for (const auto& f : rational_linear_factors(e1.polynomial))
    if (auto c = invariance_cofactor(field, f.form); c.invariant) out.push_back(std::move(c));
  return out;
}

std::vector<Cofactor> invariant_lines_through_point(const VectorField& field, const std::array<Rational, 3>& point) {
  require_plane_field(field);
  std::size_t k = 3;
  for (std::size_t i = 0; i < 3; ++i)
    if (point[i] != 0) k = i;
  if (k == 3) throw DomainError("[0:0:0] is not a projective point");
  std::array<std::size_t, 2> other{};
  for (std::size_t i = 0, j = 0; i < 3; ++i)
    if (i != k) other[j++] = i;
  const Rational r1 = point[other[0]] / point[k];
  const Rational r2 = point[other[1]] / point[k];

  // New coordinates u1 = x_i1 - r1 x_k, u2 = x_i2 - r2 x_k, u3 = x_k put the
  // point at [0:0:1]. They reuse the field's variable names by slot.
  const VariableList& vars = field.variables();
  const MPoly u1 = MPoly::variable(vars, vars[0]);
  const MPoly u2 = MPoly::variable(vars, vars[1]);
  const MPoly u3 = MPoly::variable(vars, vars[2]);
  std::vector<MPoly> images(3, MPoly(vars));
  images[k] = u3;
  images[other[0]] = u1 + r1 * u3;
  images[other[1]] = u2 + r2 * u3;

  const MPoly& xk = field.coefficients()[k];
  const MPoly y1 = compose(field.coefficients()[other[0]] - r1 * xk, images);
  const MPoly y2 = compose(field.coefficients()[other[1]] - r2 * xk, images);
  const MPoly det = u1 * y2 - u2 * y1;
  if (det.is_zero()) throw DomainError("every line through the point is invariant");

  const MPoly x1 = MPoly::variable(vars, vars[other[0]]);
  const MPoly x2 = MPoly::variable(vars, vars[other[1]]);
  const MPoly xkv = MPoly::variable(vars, vars[k]);
  std::vector<Cofactor> out;
  for (const auto& f : rational_linear_factors(det)) {
    const auto c = linear_coefficients(f.form);
    if (c[2] != 0) continue;
    const MPoly line = c[0] * (x1 - r1 * xkv) + c[1] * (x2 - r2 * xkv);
    if (auto cof = invariance_cofactor(field, line); cof.invariant) out.push_back(std::move(cof));
  }
  std::sort(out.begin(), out.end(),
            [](const Cofactor& a, const Cofactor& b) { return linear_form_before(a.curve, b.curve); });
  return out;
}

std::int64_t solution_count_bound(std::int64_t d, std::int64_t n) { return expected_degree(d, n); }

Rational curve_count_bound_exact(std::int64_t d, std::int64_t n) {
  if (d < 0 || n < 1) throw DomainError("curve_count_bound needs d >= 0 and n >= 1");
  const Integer D = static_cast<long>(d), N = static_cast<long>(n);
  const Integer num = D * (N * N * N + 6 * N * N + 11 * N + 6) - N * N * N - 2 * N * N + N + 2;
  return make_rational(num, 8);
}

std::int64_t curve_count_bound(std::int64_t d, std::int64_t n) {
  return floor(curve_count_bound_exact(d, n)).get_si();
}

Rational jouanolou_bound_exact(std::int64_t d) {
  if (d < 0) throw DomainError("jouanolou_bound needs d >= 0");
  const Integer D = static_cast<long>(d);
  return make_rational(D * (D + 2), 2);
}

std::int64_t jouanolou_bound(std::int64_t d) { return floor(jouanolou_bound_exact(d)).get_si(); }

std::int64_t field_extension_bound(std::int64_t d, std::int64_t n) {
  return std::min(solution_count_bound(d, n), jouanolou_bound(d));
}

FamilyReport family_analysis(const VectorField& x, const VectorField& y, int n) {
  require_plane_field(x);
  require_plane_field(y);
  if (x.variables() != y.variables()) throw VariableError("family members use different variables");
  if (!x.is_zero() && !y.is_zero() && x.degree() != y.degree())
    throw DomainError("family members have different degrees");
  if (n < 1) throw DomainError("extactic order n must be >= 1");

  const VectorField z = linear_combination("s", x, "t", y);
  const ExtacticReport e = extactic(z, n);
  const std::size_t si = *e.polynomial.find_variable("s");
  const std::size_t ti = *e.polynomial.find_variable("t");
  const VariableList st{"s", "t"};

  FamilyReport report;
  report.n = n;
  report.pencil_degree = x.is_zero() ? y.degree() : x.degree();
  const std::int64_t dim = static_cast<std::int64_t>(e.system.dim());
  report.form_degree = dim * (dim - 1) / 2;
  report.identically_zero = e.vanished;
  report.gcd_form = MPoly(st);

  std::map<Monomial, std::vector<Term>, GrlexGreater> groups;
  for (const auto& t : e.polynomial.terms()) {
    Monomial key({t.monomial[0], t.monomial[1], t.monomial[2]});
    groups[key].push_back({Monomial({t.monomial[si], t.monomial[ti]}), t.coefficient});
  }
  for (auto& [key, terms] : groups)
    report.coefficient_forms.push_back({{key[0], key[1], key[2]}, MPoly(st, std::move(terms))});
  if (report.coefficient_forms.empty()) return report;

  report.degree_bound = report.coefficient_forms.front().form.degree();
  MPoly g = report.coefficient_forms.front().form;
  for (std::size_t i = 1; i < report.coefficient_forms.size() && !g.is_constant(); ++i)
    g = gcd(g, report.coefficient_forms[i].form);
  report.gcd_form = normalize(g);
  if (report.gcd_form.degree() > 0) report.rational_roots = binary_form_roots(report.gcd_form);
  return report;
}

}  // namespace extactica
