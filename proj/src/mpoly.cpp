#include "extactica/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace extactica {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// ---------------------------------------------------------------------------
// MPoly

namespace {

std::shared_ptr<const VariableList> empty_variable_list() {
  static const auto empty = std::make_shared<const VariableList>();
  return empty;
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.monomial, b.monomial); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(terms[i].coefficient);
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) c += terms[j++].coefficient;
    if (c != 0) {
      if (out != i) terms[out].monomial = std::move(terms[i].monomial);
      terms[out].coefficient = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists; `sign` is +1 or -1 applied to b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly::MPoly() : vars_(empty_variable_list()) {}

MPoly::MPoly(VariableList vars) : vars_(std::make_shared<const VariableList>(std::move(vars))) {}

MPoly::MPoly(VariableList vars, std::vector<Term> terms)
    : vars_(std::make_shared<const VariableList>(std::move(vars))), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.monomial.size() != vars_->size())
      throw VariableError("monomial arity does not match the variable list");
  canonicalize(terms_);
}

MPoly::MPoly(std::shared_ptr<const VariableList> vars, std::vector<Term> terms, bool canonical)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  if (!canonical) canonicalize(terms_);
}

MPoly MPoly::constant(VariableList vars, const Rational& c) {
  const std::size_t n = vars.size();
  if (c == 0) return MPoly(std::move(vars));
  return MPoly(std::move(vars), {Term{Monomial::one(n), c}});
}

MPoly MPoly::variable(VariableList vars, std::string_view name) {
  MPoly zero(std::move(vars));
  std::vector<std::uint32_t> e(zero.num_variables(), 0);
  e[zero.variable_index(name)] = 1;
  return MPoly(zero.vars_, {Term{Monomial(std::move(e)), Rational(1)}}, true);
}

MPoly MPoly::monomial(VariableList vars, Monomial m, const Rational& c) {
  return MPoly(std::move(vars), {Term{std::move(m), c}});
}

std::optional<std::size_t> MPoly::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  return std::nullopt;
}

std::size_t MPoly::variable_index(std::string_view name) const {
  if (auto i = find_variable(name)) return *i;
  throw VariableError("undeclared variable '" + std::string(name) + "'");
}

bool MPoly::same_variables(const MPoly& other) const {
  return vars_ == other.vars_ || *vars_ == *other.vars_;
}

void MPoly::require_same_variables(const MPoly& other, const char* op) const {
  if (!same_variables(other))
    throw VariableError(std::string(op) + ": operands have different variable lists");
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

int MPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

int MPoly::degree_in(std::span<const std::size_t> vars) const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto v : vars) s += static_cast<int>(t.monomial[v]);
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

bool MPoly::is_homogeneous_in(std::span<const std::size_t> vars) const {
  const int d = degree_in(vars);
  for (const auto& t : terms_) {
    int s = 0;
    for (auto v : vars) s += static_cast<int>(t.monomial[v]);
    if (s != d) return false;
  }
  return true;
}

const Term& MPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  require_same_variables(other, "add");
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  require_same_variables(other, "subtract");
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_variables(b, "multiply");
  if (a.is_zero() || b.is_zero()) return MPoly(a.vars_, {}, true);
  // A single-term factor preserves the order of the other operand.
  if (a.size() == 1 || b.size() == 1) {
    const MPoly& single = a.size() == 1 ? a : b;
    const MPoly& other = a.size() == 1 ? b : a;
    const Term& s = single.terms_.front();
    std::vector<Term> out;
    out.reserve(other.size());
    for (const auto& t : other.terms_) out.push_back({t.monomial * s.monomial, t.coefficient * s.coefficient});
    return MPoly(a.vars_, std::move(out), true);
  }
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  return MPoly(a.vars_, std::move(out), false);
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!a.same_variables(b) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Free functions

MPoly add(const MPoly& p, const MPoly& q) { return p + q; }
MPoly mul(const MPoly& p, const MPoly& q) { return p * q; }

MPoly pow(const MPoly& p, unsigned k) {
  MPoly result = MPoly::constant(p.variables(), 1);
  MPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

MPoly partial_derivative(const MPoly& p, std::string_view var) {
  return partial_derivative(p, p.variable_index(var));
}

MPoly partial_derivative(const MPoly& p, std::size_t var) {
  if (var >= p.num_variables()) throw VariableError("partial derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coefficient * e});
  }
  return MPoly(p.variables(), std::move(out));
}

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q) {
  if (!p.same_variables(q)) throw VariableError("divide: operands have different variable lists");
  if (q.is_zero()) throw DivisionError("division by the zero polynomial");
  if (p.is_zero()) return MPoly(p.variables());
  if (p.degree() < q.degree()) return std::nullopt;

  const Term& lead = q.leading_term();
  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lead.monomial.divides(t.monomial)) return std::nullopt;
      out.push_back({t.monomial / lead.monomial, t.coefficient / lead.coefficient});
    }
    return MPoly(p.variables(), std::move(out));
  }

  // Leading-term reduction. In an exact division the leading term of every
  // intermediate remainder is divisible by lt(q); the first failure proves
  // non-divisibility.
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.monomial, t.coefficient);
  std::vector<Term> quotient;
  const auto& qt = q.terms();
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    Monomial m = top->first / lead.monomial;
    Rational c = top->second / lead.coefficient;
    rem.erase(top);
    for (std::size_t k = 1; k < qt.size(); ++k) {
      Monomial mk = qt[k].monomial * m;
      auto [it, inserted] = rem.try_emplace(std::move(mk), 0);
      it->second -= qt[k].coefficient * c;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({std::move(m), std::move(c)});
  }
  return MPoly(p.variables(), std::move(quotient));
}

MPoly exact_divide(const MPoly& p, const MPoly& q) {
  if (auto h = try_divide(p, q)) return std::move(*h);
  throw DivisionError("polynomial division is not exact");
}

Rational evaluate(const MPoly& p, std::span<const Rational> values) {
  if (values.size() != p.num_variables()) throw VariableError("evaluate: wrong number of values");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v *= values[i];
    }
    sum += v;
  }
  return sum;
}

Rational evaluate(const MPoly& p, const std::map<std::string, Rational>& point) {
  std::vector<Rational> values;
  values.reserve(p.num_variables());
  for (const auto& name : p.variables()) {
    auto it = point.find(name);
    if (it == point.end()) throw VariableError("evaluate: no value for variable '" + name + "'");
    values.push_back(it->second);
  }
  return evaluate(p, values);
}

MPoly substitute(const MPoly& p, const std::map<std::string, Rational>& values) {
  std::vector<std::optional<Rational>> assigned(p.num_variables());
  for (const auto& [name, value] : values) assigned[p.variable_index(name)] = value;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    Rational c = t.coefficient;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!assigned[i]) continue;
      for (std::uint32_t e = 0; e < exps[i]; ++e) c *= *assigned[i];
      exps[i] = 0;
    }
    out.push_back({Monomial(std::move(exps)), std::move(c)});
  }
  return MPoly(p.variables(), std::move(out));
}

MPoly compose(const MPoly& p, std::span<const MPoly> images) {
  if (images.size() != p.num_variables()) throw VariableError("compose: one image per variable required");
  if (images.empty()) return p;
  for (const auto& img : images)
    if (!img.same_variables(images.front())) throw VariableError("compose: images over different variable lists");
  const VariableList& target = images.front().variables();
  // Cache powers of each image.
  std::vector<std::vector<MPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(MPoly::constant(target, 1));
    const auto top = p.degree_in(i);
    for (std::uint32_t e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  MPoly result(target);
  for (const auto& t : p.terms()) {
    MPoly term = MPoly::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] > 0) term *= powers[i][t.monomial[i]];
    result += term;
  }
  return result;
}

MPoly with_variables(const MPoly& p, const VariableList& vars) {
  if (p.variables() == vars) return p;
  std::vector<std::size_t> index(p.num_variables());
  std::vector<bool> used(p.num_variables(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] > 0) used[i] = true;
  for (std::size_t i = 0; i < p.num_variables(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), p.variables()[i]);
    if (it == vars.end()) {
      if (used[i]) throw VariableError("variable '" + p.variables()[i] + "' missing from target variable list");
      index[i] = vars.size();
    } else {
      index[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(vars.size(), 0);
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] > 0) exps[index[i]] = t.monomial[i];
    out.push_back({Monomial(std::move(exps)), t.coefficient});
  }
  return MPoly(vars, std::move(out));
}

MPoly homogenize(const MPoly& p, std::string_view v, int m) {
  if (!p.find_variable(v)) {
    VariableList extended = p.variables();
    extended.emplace_back(v);
    return homogenize(with_variables(p, extended), v, m);
  }
  std::vector<std::size_t> all(p.num_variables());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return homogenize(p, v, m, all);
}

MPoly homogenize(const MPoly& p, std::string_view v, int m, std::span<const std::size_t> counted) {
  const std::size_t vi = p.variable_index(v);
  if (p.degree_in(vi) > 0) throw DomainError("homogenize: variable '" + std::string(v) + "' already occurs");
  if (p.degree_in(counted) > m) throw DomainError("homogenize: degree exceeds target degree");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    int s = 0;
    for (auto c : counted)
      if (c != vi) s += static_cast<int>(t.monomial[c]);
    std::vector<std::uint32_t> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    exps[vi] = static_cast<std::uint32_t>(m - s);
    out.push_back({Monomial(std::move(exps)), t.coefficient});
  }
  return MPoly(p.variables(), std::move(out));
}

MPoly homogeneous_part(const MPoly& p, int k, std::span<const std::size_t> counted) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int s = 0;
    for (auto c : counted) s += static_cast<int>(t.monomial[c]);
    if (s == k) out.push_back(t);
  }
  return MPoly(p.variables(), std::move(out));
}

std::vector<MPoly> coefficients_in(const MPoly& p, std::size_t var) {
  std::vector<std::vector<Term>> buckets(p.is_zero() ? 1 : p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
    const auto e = exps[var];
    exps[var] = 0;
    buckets[e].push_back({Monomial(std::move(exps)), t.coefficient});
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(p.variables(), std::move(b));
  return out;
}

}  // namespace extactica
