#include "extactica/extactic.hpp"

#include <algorithm>
#include <functional>

#include "extactica/gcd.hpp"
#include "extactica/linalg.hpp"

namespace extactica {

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const VariableList& vars)
    : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, MPoly(vars)) {}

PolyMatrix::PolyMatrix(std::vector<std::vector<MPoly>> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  if (!rows.empty()) vars_ = rows.front().front().variables();
  for (auto& r : rows) {
    if (r.size() != cols_) throw DomainError("matrix rows have different lengths");
    for (auto& e : r) {
      if (e.variables() != vars_) throw VariableError("matrix entries over different variable lists");
      data_.push_back(std::move(e));
    }
  }
}

// ---------------------------------------------------------------------------
// Linear systems

LinearSystem::LinearSystem(std::vector<MPoly> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw DomainError("linear system needs a nonempty basis");
  for (const auto& b : basis_)
    if (!b.same_variables(basis_.front())) throw VariableError("linear system basis over different variable lists");

  std::map<Monomial, std::size_t, GrlexGreater> columns;
  for (const auto& b : basis_)
    for (const auto& t : b.terms()) columns.try_emplace(t.monomial, columns.size());
  RationalMatrix coeffs(basis_.size(), std::vector<Rational>(columns.size(), 0));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (const auto& t : basis_[i].terms()) coeffs[i][columns.at(t.monomial)] = t.coefficient;
  if (rank(coeffs) != basis_.size()) throw DomainError("linear system basis is linearly dependent");

  if (std::all_of(basis_.begin(), basis_.end(), [&](const MPoly& b) {
        return b.is_homogeneous() && b.degree() == basis_.front().degree();
      }))
    degree_ = basis_.front().degree();
}

LinearSystem monomial_basis(int n, const VariableList& vars) {
  if (n < 1) throw DomainError("monomial basis needs degree n >= 1");
  if (vars.empty()) throw DomainError("monomial basis needs at least one variable");
  std::vector<MPoly> basis;
  std::vector<std::uint32_t> e(vars.size(), 0);
  // Depth-first over exponent of the first variable, highest first, which
  // yields lexicographically descending exponent vectors.
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == vars.size()) {
      e[i] = left;
      basis.push_back(MPoly::monomial(vars, Monomial(e)));
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      fill(i + 1, left - k);
    }
  };
  fill(0, static_cast<std::uint32_t>(n));
  return LinearSystem(std::move(basis));
}

PolyMatrix wronskian_matrix(const VectorField& field, const LinearSystem& system, std::size_t rows) {
  if (rows < 1) throw DomainError("wronskian matrix needs at least one row");
  PolyMatrix m(rows, system.dim(), field.ring_variables());
  for (std::size_t j = 0; j < system.dim(); ++j) {
    const auto column = iterate_lie(field, system.basis()[j], static_cast<int>(rows) - 1);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = column[i];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

bool has_zero_line(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool row_zero = true, col_zero = true;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row_zero = row_zero && m(i, j).is_zero();
      col_zero = col_zero && m(j, i).is_zero();
    }
    if (row_zero || col_zero) return true;
  }
  return false;
}

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
}

MPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const VariableList& vars = m.variables();
  if (row == m.rows()) return MPoly::constant(vars, 1);
  MPoly sum(vars);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MPoly& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    const std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    MPoly minor = cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (minor.is_zero()) continue;
    if (k % 2 == 0)
      sum += entry * minor;
    else
      sum -= entry * minor;
  }
  return sum;
}

}  // namespace

MPoly cofactor_determinant(const PolyMatrix& m) {
  require_square(m);
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(m, cols, 0);
}

MPoly bareiss_determinant(const PolyMatrix& input) {
  require_square(input);
  const std::size_t n = input.rows();
  const VariableList& vars = input.variables();
  if (n == 0) return MPoly::constant(vars, 1);

  // Make every row integer-primitive; det(input) = det(a) / scale.
  std::vector<std::vector<MPoly>> a(n);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer den_lcm = 1, num_gcd = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : input(i, j).terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
      }
    if (num_gcd == 0) return MPoly(vars);
    const Rational row_scale = make_rational(den_lcm, num_gcd);
    scale *= row_scale;
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(input(i, j) * row_scale);
  }

  bool negate = false;
  MPoly previous = MPoly::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pivot: nonzero entry in column k with the fewest terms.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a[i][k].is_zero() && (pivot == n || a[i][k].size() < a[pivot][k].size())) pivot = i;
    if (pivot == n) return MPoly(vars);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    const bool divide = k > 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly value = a[i][j] * a[k][k];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) value -= a[i][k] * a[k][j];
        a[i][j] = divide ? exact_divide(value, previous) : std::move(value);
      }
      a[i][k] = MPoly(vars);
    }
    previous = a[k][k];
  }
  MPoly det = a[n - 1][n - 1] * Rational(1 / scale);
  return negate ? -det : det;
}

MPoly determinant(const PolyMatrix& m) {
  require_square(m);
  if (m.rows() > 0 && has_zero_line(m)) return MPoly(m.variables());
  return m.rows() <= 4 ? cofactor_determinant(m) : bareiss_determinant(m);
}

// ---------------------------------------------------------------------------
// Extactics

namespace {

std::vector<int> row_degrees_of(const VectorField& field, const LinearSystem& system, const PolyMatrix& m) {
  std::vector<int> degrees;
  if (field.kind() == FieldKind::projective && system.degree()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      degrees.push_back(*system.degree() + static_cast<int>(i) * (field.degree() - 1));
    return degrees;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int d = -1;
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree_in(field.variable_indices()));
    degrees.push_back(d);
  }
  return degrees;
}

}  // namespace

ExtacticReport extactic_system(const VectorField& field, const LinearSystem& system) {
  const PolyMatrix m = wronskian_matrix(field, system, system.dim());
  ExtacticReport report{determinant(m), system, 0, false, row_degrees_of(field, system, m)};
  report.vanished = report.polynomial.is_zero();
  const bool exact = field.kind() == FieldKind::projective && system.degree().has_value();
  for (int d : report.row_degrees) report.expected_degree += exact ? d : std::max(d, 0);
  return report;
}

ExtacticReport extactic(const VectorField& field, int n) {
  if (n < 1) throw DomainError("extactic order n must be >= 1");
  if (field.kind() != FieldKind::projective) throw DomainError("extactic expects a projective field");
  if (field.dimension() != 3) throw DomainError("extactic expects a field in three variables");
  if (field.is_zero()) throw DomainError("extactic of the zero vector field");
  return extactic_system(field, monomial_basis(n, field.variables()));
}

std::int64_t expected_degree(std::int64_t d, std::int64_t n) {
  if (d < 0 || n < 1) throw DomainError("expected_degree needs d >= 0 and n >= 1");
  const std::int64_t n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  return (d * (n4 + 6 * n3 + 11 * n2 + 6 * n) - n4 - 2 * n3 + n2 + 2 * n) / 8;
}

std::vector<IdealGenerator> extactic_ideal_generators(const VectorField& field, const LinearSystem& system,
                                                      int max_order) {
  const int l = static_cast<int>(system.dim());
  if (max_order < l - 1) throw DomainError("extactic ideal: max order must be at least dim V - 1");
  const PolyMatrix all = wronskian_matrix(field, system, static_cast<std::size_t>(max_order) + 1);

  std::vector<IdealGenerator> out;
  std::vector<int> orders(l);
  for (int i = 0; i < l; ++i) orders[i] = i;
  for (;;) {
    PolyMatrix sub(l, l, all.variables());
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) sub(i, j) = all(orders[i], j);
    out.push_back({orders, determinant(sub)});
    // Next combination in lexicographic order.
    int i = l - 1;
    while (i >= 0 && orders[i] == max_order - (l - 1 - i)) --i;
    if (i < 0) break;
    ++orders[i];
    for (int j = i + 1; j < l; ++j) orders[j] = orders[j - 1] + 1;
  }
  return out;
}

ContactOrder contact_order(const MPoly& s, const VectorField& field, const std::map<std::string, Rational>& point,
                           int cap) {
  if (cap < 0) throw DomainError("contact cap must be non-negative");
  MPoly current = field.lift(s);
  for (int k = 0; k <= cap; ++k) {
    if (evaluate(current, point) != 0) return {k, cap};
    if (k < cap) current = lie_derivative(field, current);
  }
  return {std::nullopt, cap};
}

}  // namespace extactica
