#include "extactica/roots.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace extactica {

namespace {

// Pollard-Brent rho; n is odd, composite and not a perfect power of a small
// prime. Returns a nontrivial factor.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& value) {
  if (value == 0) throw DomainError("cannot factor zero");
  Integer n = abs(value);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t existing = out.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  // Integer coefficients, lowest power first.
  Integer den_lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto& c : coeffs) a.push_back(c.get_num() * (den_lcm / c.get_den()));
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty()) throw DomainError("rational roots of the zero polynomial");

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  if (a.size() > 1) {
    const auto numerators = divisors(a.front());
    const auto denominators = divisors(a.back());
    const std::size_t deg = a.size() - 1;
    for (const auto& q : denominators) {
      for (const auto& p : numerators) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          // q^deg * f(p/q) by Horner in integers.
          const Integer pp = sign * p;
          Integer acc = a[deg];
          Integer qpow = 1;
          for (std::size_t i = deg; i-- > 0;) {
            qpow *= q;
            acc = acc * pp + a[i] * qpow;
          }
          if (acc == 0) roots.push_back(make_rational(pp, q));
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ProjectivePair make_projective_pair(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw DomainError("(0 : 0) is not a projective point");
  Integer den_lcm;
  mpz_lcm(den_lcm.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Integer x = a.get_num() * (den_lcm / a.get_den());
  Integer y = b.get_num() * (den_lcm / b.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  x /= g;
  y /= g;
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

std::vector<ProjectivePair> binary_form_roots(const MPoly& form) {
  if (form.num_variables() != 2) throw DomainError("binary form must have exactly two variables");
  if (form.is_zero()) throw DomainError("roots of the zero binary form");
  if (!form.is_homogeneous()) throw DomainError("binary form must be homogeneous");
  const auto m = static_cast<std::uint32_t>(form.degree());
  std::vector<Rational> coeffs(m + 1, 0);
  for (const auto& t : form.terms()) coeffs[t.monomial[0]] = t.coefficient;

  std::vector<ProjectivePair> out;
  // (1 : 0) is a zero iff the pure first-variable term is missing.
  if (coeffs[m] == 0) out.push_back({1, 0});
  for (const auto& r : rational_roots(coeffs)) out.push_back(make_projective_pair(r, 1));

  auto key = [](const ProjectivePair& p) {
    const Integer h = std::max(abs(p.first), abs(p.second));
    const int support = (p.first != 0) + (p.second != 0);
    return std::make_tuple(h, support, Integer(-p.first), p.second);
  };
  std::sort(out.begin(), out.end(), [&](const ProjectivePair& a, const ProjectivePair& b) { return key(a) < key(b); });
  return out;
}

}  // namespace extactica
