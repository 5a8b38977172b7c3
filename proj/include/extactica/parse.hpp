#pragma once

#include <map>
#include <string>
#include <string_view>

#include "extactica/mpoly.hpp"

namespace extactica {

enum class FieldKind { affine, projective };

std::string to_string(FieldKind kind);

/// A vector field as read from text or JSON, before it becomes a
/// derivation. Coefficients live over `variables` followed by `parameters`.
struct ParsedField {
  VariableList variables;
  VariableList parameters;
  std::map<std::string, MPoly> coefficients;
  FieldKind kind = FieldKind::projective;

  /// variables ++ parameters: the variable list of every coefficient.
  VariableList ring_variables() const;
};

/// Parses a polynomial in the grammar
///
///   poly     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | ident | '(' poly ')'
///   rational := int ('/' uint)?
///
/// Implicit multiplication is not supported: "xy" is one identifier.
/// Throws ParseError (with line and column) on any rejection.
MPoly parse_polynomial(std::string_view text, const VariableList& variables);

/// Canonical text: terms in graded lex order, e.g. "x^3 - 2/3*x*y + 1".
/// parse_polynomial(render(p), p.variables()) == p.
std::string render(const MPoly& p);

/// Reads a field from either form:
///
///   text:  vars x y z; [params s t;] [kind projective|affine;]
///          dx: <poly>; dy: <poly>; dz: <poly>
///          (statements end at ';' or newline, '#' starts a comment)
///   JSON:  {"kind": "projective"|"affine", "vars": [...],
///           "coeffs": {"x": "<poly>", ...}, "params": [...]}
///
/// Missing coefficients are zero; kind defaults to projective. Projective
/// fields must have homogeneous coefficients of one common degree in the
/// field variables (parameters do not count towards degrees).
ParsedField parse_vector_field(std::string_view text_or_json);

}  // namespace extactica
