#include "extactica/gcd.hpp"

#include <optional>

namespace extactica {

namespace {

// Index of the last variable occurring in p or q, if any.
std::optional<std::size_t> main_variable(const MPoly& p, const MPoly& q) {
  for (std::size_t i = p.num_variables(); i-- > 0;)
    if (p.degree_in(i) > 0 || q.degree_in(i) > 0) return i;
  return std::nullopt;
}

MPoly one_like(const MPoly& p) { return MPoly::constant(p.variables(), 1); }

MPoly gcd_nonzero(const MPoly& p, const MPoly& q);

MPoly content_nonzero(const MPoly& p, std::size_t var) {
  MPoly g(p.variables());
  for (auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd_nonzero(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

// Gcd of two polynomials that are primitive in `var` and both involve it.
MPoly primitive_prs(MPoly a, MPoly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  for (;;) {
    // Pseudo-remainder: repeatedly cancel the top var-degree of a.
    const auto db = b.degree_in(var);
    const auto cb = coefficients_in(b, var);
    const MPoly& lc_b = cb.back();
    MPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
      const auto dr = r.degree_in(var);
      const auto cr = coefficients_in(r, var);
      std::vector<std::uint32_t> e(r.num_variables(), 0);
      e[var] = dr - db;
      MPoly shift = MPoly::monomial(r.variables(), Monomial(std::move(e)));
      r = normalize(lc_b * r - cr.back() * shift * b);
    }
    if (r.is_zero()) return b;
    if (r.degree_in(var) == 0) return one_like(a);
    a = std::move(b);
    b = normalize(exact_divide(r, content_nonzero(r, var)));
  }
}

MPoly gcd_nonzero(const MPoly& p, const MPoly& q) {
  if (p.is_constant() || q.is_constant()) return one_like(p);
  if (p == q) return normalize(p);
  const auto v = main_variable(p, q);
  const std::size_t var = *v;
  if (p.degree_in(var) == 0) return gcd_nonzero(p, content_nonzero(q, var));
  if (q.degree_in(var) == 0) return gcd_nonzero(content_nonzero(p, var), q);
  const MPoly cp = content_nonzero(p, var);
  const MPoly cq = content_nonzero(q, var);
  const MPoly pp = normalize(exact_divide(p, cp));
  const MPoly qq = normalize(exact_divide(q, cq));
  return normalize(gcd_nonzero(cp, cq) * primitive_prs(pp, qq, var));
}

}  // namespace

MPoly normalize(const MPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

MPoly gcd(const MPoly& p, const MPoly& q) {
  if (!p.same_variables(q)) throw VariableError("gcd: operands have different variable lists");
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  return normalize(gcd_nonzero(p, q));
}

MPoly lcm(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("lcm of a zero polynomial");
  return normalize(exact_divide(p * q, gcd(p, q)));
}

MPoly content_in(const MPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return content_nonzero(p, var);
}

MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  MPoly result = MPoly::constant(p.variables(), 1);
  for (std::size_t v = 0; v < p.num_variables(); ++v) {
    if (p.degree_in(v) == 0) continue;
    // p / gcd(p, dp/dv) is the product of the distinct factors involving v.
    const MPoly involving = exact_divide(p, gcd(p, partial_derivative(p, v)));
    result = lcm(result, involving);
  }
  return normalize(result);
}

}  // namespace extactica
