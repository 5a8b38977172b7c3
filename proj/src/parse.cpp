#include "extactica/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "json.hpp"

namespace extactica {

std::string to_string(FieldKind kind) { return kind == FieldKind::affine ? "affine" : "projective"; }

VariableList ParsedField::ring_variables() const {
  VariableList all = variables;
  all.insert(all.end(), parameters.begin(), parameters.end());
  return all;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Recursive-descent parser over text[pos, end). Positions reported in
// errors are relative to the whole text so embedded polynomials (inside a
// field description) point at the right line and column.
class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t begin, std::size_t end, const VariableList& vars)
      : text_(text), pos_(begin), end_(end), vars_(vars) {}

  MPoly parse_all() {
    MPoly p = poly();
    skip_space();
    if (pos_ < end_) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  void skip_space() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < end_ && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly poly() {
    MPoly acc(vars_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    MPoly first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MPoly factor() {
    MPoly b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= end_ || !is_digit(text_[pos_])) fail("exponent must be a non-negative integer literal");
      const Integer e = digits();
      if (e > 10000) fail_at("exponent too large", at);
      b = pow(b, static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  MPoly base() {
    skip_space();
    if (pos_ >= end_) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = poly();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_digit(c)) {
      Integer num = digits();
      Integer den = 1;
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= end_ || !is_digit(text_[pos_])) fail("expected denominator digits after '/'");
        den = digits();
        if (den == 0) fail_at("zero denominator", at);
      }
      return MPoly::constant(vars_, make_rational(num, den));
    }
    if (is_ident_start(c)) {
      const std::size_t at = pos_;
      while (pos_ < end_ && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(at, pos_ - at));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
        fail_at("undeclared identifier '" + name + "'", at);
      return MPoly::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer digits() {
    const std::size_t at = pos_;
    while (pos_ < end_ && is_digit(text_[pos_])) ++pos_;
    return Integer(std::string(text_.substr(at, pos_ - at)), 10);
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  const VariableList& vars_;
};

void check_names(const VariableList& vars, const VariableList& params) {
  std::set<std::string> seen;
  for (const auto* list : {&vars, &params}) {
    for (const auto& name : *list) {
      if (name.empty() || !is_ident_start(name.front()) ||
          !std::all_of(name.begin(), name.end(), is_ident_char))
        throw ParseError("invalid variable name '" + name + "'", 1, 1);
      if (!seen.insert(name).second) throw ParseError("duplicate variable '" + name + "'", 1, 1);
    }
  }
}

// Degree and homogeneity checks for projective fields. `where` maps a
// variable to the (line, column) of its coefficient for error reporting.
void validate(const ParsedField& field, const std::map<std::string, std::pair<std::size_t, std::size_t>>& where) {
  if (field.variables.empty()) throw ParseError("field declares no variables", 1, 1);
  if (field.kind != FieldKind::projective) return;
  std::vector<std::size_t> counted(field.variables.size());
  for (std::size_t i = 0; i < counted.size(); ++i) counted[i] = i;
  int common = -1;
  for (const auto& v : field.variables) {
    const MPoly& c = field.coefficients.at(v);
    if (c.is_zero()) continue;
    auto [line, column] = where.count(v) ? where.at(v) : std::pair<std::size_t, std::size_t>{1, 1};
    if (!c.is_homogeneous_in(counted))
      throw ParseError("projective field: coefficient of d" + v + " is not homogeneous", line, column);
    const int d = c.degree_in(counted);
    if (common >= 0 && d != common)
      throw ParseError("projective field: coefficient degree mismatch (d" + v + " has degree " +
                           std::to_string(d) + ", expected " + std::to_string(common) + ")",
                       line, column);
    common = d;
  }
}

ParsedField parse_field_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
  if (!doc.is_object()) throw ParseError("field JSON must be an object", 1, 1);

  ParsedField field;
  auto string_list = [&](const char* key) {
    VariableList out;
    if (!doc.contains(key)) return out;
    if (!doc[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of names", 1, 1);
    for (const auto& v : doc[key]) {
      if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be an array of names", 1, 1);
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  if (!doc.contains("vars")) throw ParseError("field JSON requires \"vars\"", 1, 1);
  field.variables = string_list("vars");
  field.parameters = string_list("params");
  check_names(field.variables, field.parameters);
  if (doc.contains("kind")) {
    const auto& k = doc["kind"];
    if (k == "affine")
      field.kind = FieldKind::affine;
    else if (k == "projective")
      field.kind = FieldKind::projective;
    else
      throw ParseError("\"kind\" must be \"affine\" or \"projective\"", 1, 1);
  }
  const VariableList ring = field.ring_variables();
  for (const auto& v : field.variables) field.coefficients.emplace(v, MPoly(ring));
  if (doc.contains("coeffs")) {
    const auto& coeffs = doc["coeffs"];
    if (!coeffs.is_object()) throw ParseError("\"coeffs\" must be an object", 1, 1);
    for (const auto& [key, value] : coeffs.items()) {
      if (std::find(field.variables.begin(), field.variables.end(), key) == field.variables.end())
        throw ParseError("coefficient for undeclared variable '" + key + "'", 1, 1);
      std::string poly_text;
      if (value.is_string())
        poly_text = value.get<std::string>();
      else if (value.is_number_integer())
        poly_text = value.dump();
      else
        throw ParseError("coefficient of '" + key + "' must be a polynomial string", 1, 1);
      try {
        field.coefficients[key] = PolyParser(poly_text, 0, poly_text.size(), ring).parse_all();
      } catch (const ParseError& e) {
        throw ParseError("in coefficient of '" + key + "': " + e.message(), e.line(), e.column());
      }
    }
  }
  validate(field, {});
  return field;
}

ParsedField parse_field_text(std::string_view text) {
  struct Statement {
    std::size_t begin, end;
  };
  // Split into statements on ';' and newlines, dropping comments.
  std::vector<Statement> statements;
  std::size_t start = 0;
  std::optional<std::size_t> comment_at;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\n';
    if (comment_at) {
      if (c == '\n') {
        statements.push_back({start, *comment_at});
        start = i + 1;
        comment_at.reset();
      }
      continue;
    }
    if (c == '#') {
      comment_at = i;
    } else if (c == ';' || c == '\n') {
      statements.push_back({start, i});
      start = i + 1;
    }
  }

  ParsedField field;
  bool have_vars = false;
  std::vector<std::pair<std::string, Statement>> coefficient_texts;
  const PolyParser locator(text, 0, text.size(), field.variables);

  for (auto [b, e] : statements) {
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) continue;
    const std::string_view stmt = text.substr(b, e - b);
    std::size_t word_end = 0;
    while (word_end < stmt.size() && is_ident_char(stmt[word_end])) ++word_end;
    const std::string_view word = stmt.substr(0, word_end);

    auto names = [&](std::size_t from) {
      VariableList out;
      std::size_t i = from;
      while (i < stmt.size()) {
        while (i < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[i]))) ++i;
        if (i >= stmt.size()) break;
        const std::size_t s = i;
        if (!is_ident_start(stmt[i])) locator.fail_at("expected a variable name", b + i);
        while (i < stmt.size() && is_ident_char(stmt[i])) ++i;
        if (i < stmt.size() && !std::isspace(static_cast<unsigned char>(stmt[i])))
          locator.fail_at("unexpected '" + std::string(1, stmt[i]) + "'", b + i);
        out.emplace_back(stmt.substr(s, i - s));
      }
      return out;
    };

    std::size_t after = word_end;
    while (after < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[after]))) ++after;
    if (after < stmt.size() && stmt[after] == ':') {
      if (word.size() < 2 || word.front() != 'd') locator.fail_at("expected 'd<variable>:'", b);
      coefficient_texts.push_back({std::string(word.substr(1)), {b + after + 1, e}});
    } else if (word == "vars") {
      field.variables = names(word_end);
      have_vars = true;
    } else if (word == "params") {
      field.parameters = names(word_end);
    } else if (word == "kind") {
      const auto k = names(word_end);
      if (k.size() != 1 || (k[0] != "affine" && k[0] != "projective"))
        locator.fail_at("kind must be 'affine' or 'projective'", b);
      field.kind = k[0] == "affine" ? FieldKind::affine : FieldKind::projective;
    } else {
      locator.fail_at("unknown statement '" + std::string(word) + "'", b);
    }
  }
  if (!have_vars) throw ParseError("missing 'vars' declaration", 1, 1);
  check_names(field.variables, field.parameters);

  const VariableList ring = field.ring_variables();
  for (const auto& v : field.variables) field.coefficients.emplace(v, MPoly(ring));
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;
  std::set<std::string> assigned;
  for (const auto& [var, range] : coefficient_texts) {
    if (std::find(field.variables.begin(), field.variables.end(), var) == field.variables.end())
      locator.fail_at("coefficient for undeclared variable '" + var + "'", range.begin);
    if (!assigned.insert(var).second) locator.fail_at("duplicate coefficient for '" + var + "'", range.begin);
    field.coefficients[var] = PolyParser(text, range.begin, range.end, ring).parse_all();
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < range.begin; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    where[var] = {line, column};
  }
  validate(field, where);
  return field;
}

}  // namespace

MPoly parse_polynomial(std::string_view text, const VariableList& variables) {
  return PolyParser(text, 0, text.size(), variables).parse_all();
}

std::string render(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = abs(t.coefficient);
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.variables()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += mono;
    else
      out += to_string(magnitude) + "*" + mono;
  }
  return out;
}

ParsedField parse_vector_field(std::string_view text_or_json) {
  const auto first = text_or_json.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text_or_json[first] == '{') return parse_field_json(text_or_json);
  return parse_field_text(text_or_json);
}

}  // namespace extactica
