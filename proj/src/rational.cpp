#include "extactica/rational.hpp"

#include <stdexcept>

namespace extactica {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  Integer num, den = 1;
  if (num.set_str(s.substr(0, slash), 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace extactica
