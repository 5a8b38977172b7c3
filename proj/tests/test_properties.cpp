#include <catch_amalgamated.hpp>

#include <random>

#include "extactica/gcd.hpp"
#include "extactica/invariants.hpp"
#include "extactica/linalg.hpp"
#include "extactica/parse.hpp"
#include "fields.hpp"

using namespace extactica;
using fixtures::poly;
using fixtures::xyz;

namespace {

MPoly random_poly(std::mt19937& rng, int max_degree = 2, int terms = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  MPoly p(xyz());
  for (int k = 0; k < terms; ++k) p += fixtures::random_form(rng, deg(rng), 1) * fixtures::random_rational(rng, 4);
  return p;
}

MPoly random_nonzero(std::mt19937& rng, int max_degree = 2, int terms = 3) {
  for (;;)
    if (MPoly p = random_poly(rng, max_degree, terms); !p.is_zero()) return p;
}

// Equal up to a nonzero rational constant.
bool associated(const MPoly& a, const MPoly& b) { return normalize(a) == normalize(b); }

std::map<std::string, Rational> random_point(std::mt19937& rng) {
  return {{"x", fixtures::random_rational(rng)}, {"y", fixtures::random_rational(rng)}, {"z", fixtures::random_rational(rng)}};
}

}  // namespace

TEST_CASE("ring laws", "[property][exact-poly]") {
  std::mt19937 rng(101);
  for (int i = 0; i < 100; ++i) {
    const MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("exact division undoes multiplication", "[property][exact-poly]") {
  std::mt19937 rng(102);
  for (int i = 0; i < 100; ++i) {
    const MPoly p = random_poly(rng, 3, 4), q = random_nonzero(rng, 2, 3);
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("gcd divides and is multiplicative in a common factor", "[property][exact-poly]") {
  std::mt19937 rng(103);
  for (int i = 0; i < 60; ++i) {
    const MPoly p = random_nonzero(rng), q = random_nonzero(rng), r = random_nonzero(rng, 2, 2);
    const MPoly g = gcd(p, q);
    CHECK(try_divide(p, g).has_value());
    CHECK(try_divide(q, g).has_value());
    CHECK(associated(gcd(p * r, q * r), g * r));
  }
}

TEST_CASE("square-free part", "[property][exact-poly]") {
  std::mt19937 rng(104);
  for (int i = 0; i < 40; ++i) {
    const MPoly a = random_nonzero(rng, 2, 2), b = random_nonzero(rng, 1, 2);
    const MPoly p = a * b * b;
    const MPoly s = squarefree_part(p);
    CHECK(try_divide(p, s).has_value());
    CHECK(try_divide(s * s * a, p).has_value());
    for (std::size_t v = 0; v < 3; ++v) {
      const MPoly ds = partial_derivative(s, v);
      if (ds.is_zero()) continue;
      const MPoly g = gcd(s, ds);
      CHECK(squarefree_part(g) == g);
    }
  }
}

TEST_CASE("homogenize round trip", "[property][exact-poly]") {
  std::mt19937 rng(105);
  const VariableList xy{"x", "y"};
  for (int i = 0; i < 50; ++i) {
    const MPoly p = with_variables(substitute(fixtures::random_form(rng, 3, 5), {{"z", 1}}), xy);
    const int m = std::max(p.degree(), 0) + i % 2;
    const MPoly h = homogenize(p, "z", m);
    CHECK((h.is_zero() || (h.is_homogeneous() && h.degree() == m)));
    CHECK(with_variables(substitute(h, {{"z", 1}}), xy) == p);
  }
}

TEST_CASE("rendering is deterministic", "[property][exact-poly]") {
  std::mt19937 rng(106);
  for (int i = 0; i < 50; ++i) {
    const MPoly p = random_poly(rng, 3, 5);
    const std::string a = render(p);
    CHECK(render(parse_polynomial(a, xyz())) == a);
    CHECK(render(p) == a);
  }
}

TEST_CASE("Leibniz rule, linearity and grading", "[property][derivation]") {
  std::mt19937 rng(107);
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + i % 3;
    const auto x = fixtures::random_field(rng, d);
    const MPoly f = random_poly(rng), g = random_poly(rng);
    const Rational alpha = fixtures::random_rational(rng), beta = fixtures::random_rational(rng);
    CHECK(lie_derivative(x, f * g) == lie_derivative(x, f) * g + f * lie_derivative(x, g));
    CHECK(lie_derivative(x, alpha * f + beta * g) == alpha * lie_derivative(x, f) + beta * lie_derivative(x, g));
    const MPoly h = fixtures::random_form(rng, 2, 3);
    const MPoly xh = lie_derivative(x, h);
    CHECK((xh.is_zero() || (xh.is_homogeneous() && xh.degree() == 2 + d - 1)));
  }
}

TEST_CASE("parameters are annihilated", "[property][derivation]") {
  std::mt19937 rng(108);
  for (int i = 0; i < 10; ++i) {
    const auto z = linear_combination("s", fixtures::random_field(rng, 2), "t", fixtures::random_field(rng, 2));
    for (const char* p : {"s", "t"}) CHECK(lie_derivative(z, MPoly::variable(z.ring_variables(), p)).is_zero());
  }
}

TEST_CASE("basis-change covariance", "[property][extactic]") {
  std::mt19937 rng(109);
  for (int i = 0; i < 20; ++i) {
    const auto x = fixtures::random_field(rng, 2);
    const auto basis = monomial_basis(1, xyz());
    RationalMatrix a(3, std::vector<Rational>(3));
    for (auto& row : a)
      for (auto& v : row) v = fixtures::random_rational(rng, 3);
    const Rational det_a = determinant(a);
    if (det_a == 0) continue;
    // New basis element j = sum_k a[k][j] * old_k.
    std::vector<MPoly> changed;
    for (std::size_t j = 0; j < 3; ++j) {
      MPoly v(xyz());
      for (std::size_t k = 0; k < 3; ++k) v += a[k][j] * basis.basis()[k];
      changed.push_back(v);
    }
    CHECK(extactic_system(x, LinearSystem(changed)).polynomial == extactic(x, 1).polynomial * det_a);
  }
}

TEST_CASE("radial field has vanishing extactics", "[property][extactic]") {
  for (int n = 1; n <= 3; ++n) CHECK(extactic(VectorField::radial(xyz()), n).vanished);
}

TEST_CASE("factor containment and cofactor degree", "[property][invariants]") {
  std::vector<VectorField> fields{fixtures::x_d(2), fixtures::x_d(3), fixtures::diagonal(2), fixtures::diagonal(3),
                                  fixtures::jouanolou(2), fixtures::lins_neto_x()};
  const std::vector<MPoly> candidates{poly("x"),         poly("y"),     poly("z"),         poly("x - y"),
                                      poly("x - z"),     poly("y + z"), poly("x^2 - y*z"), poly("y^2 - x*z"),
                                      poly("x^2 - z^2"), poly("x*y")};
  for (const auto& field : fields) {
    for (const auto& f : candidates) {
      const auto c = invariance_cofactor(field, f);
      if (!c.invariant) continue;
      CHECK((c.cofactor.is_zero() || (c.cofactor.is_homogeneous() && c.cofactor.degree() == field.degree() - 1)));
      for (int n = f.degree(); n <= 2; ++n) CHECK(factor_containment(field, f, n));
    }
  }
}

TEST_CASE("first integral degree is minimal", "[property][invariants]") {
  for (const auto& field : {fixtures::projective("x", "y", "0"), fixtures::diagonal(2), fixtures::diagonal(3)}) {
    const auto d = first_integral_degree(field, 3);
    REQUIRE(d.has_value());
    CHECK(extactic(field, *d).vanished);
    if (*d > 1) CHECK_FALSE(extactic(field, *d - 1).vanished);
  }
}

TEST_CASE("coefficient forms and specialization", "[property][invariants]") {
  std::mt19937 rng(110);
  for (int i = 0; i < 6; ++i) {
    const auto x = fixtures::random_field(rng, 1 + i % 2), y = fixtures::random_field(rng, 1 + i % 2);
    const int n = 1;
    const auto report = family_analysis(x, y, n);
    for (const auto& f : report.coefficient_forms) {
      CHECK(f.form.is_homogeneous());
      CHECK(f.form.degree() == report.form_degree);
    }
    for (const auto& r : report.rational_roots)
      for (const auto& f : report.coefficient_forms)
        CHECK(evaluate(f.form, {{"s", Rational(r.first)}, {"t", Rational(r.second)}}) == 0);

    const auto z = linear_combination("s", x, "t", y);
    const auto e = extactic(z, n).polynomial;
    for (int k = 0; k < 3; ++k) {
      const Rational s0 = fixtures::random_rational(rng), t0 = fixtures::random_rational(rng);
      const auto member = specialize(z, {{"s", s0}, {"t", t0}});
      if (member.is_zero()) continue;
      const MPoly specialized = with_variables(substitute(e, {{"s", s0}, {"t", t0}}), xyz());
      CHECK(specialized == extactic(member, n).polynomial);
    }
  }
}

TEST_CASE("line lists are certified and bounded", "[property][invariants]") {
  std::mt19937 rng(111);
  std::vector<VectorField> fields{fixtures::x_d(2), fixtures::x_d(3), fixtures::jouanolou(2)};
  for (int i = 0; i < 10; ++i) fields.push_back(fixtures::random_field(rng, 2, 2));
  for (const auto& field : fields) {
    std::vector<Cofactor> lines;
    try {
      lines = invariant_lines(field);
    } catch (const DomainError&) {
      continue;
    }
    CHECK(lines.size() <= static_cast<std::size_t>(expected_degree(field.degree(), 1)));
    for (const auto& c : lines) CHECK(invariance_cofactor(field, c.curve).invariant);
  }
}
