#include "extactica/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "extactica/extactic.hpp"
#include "extactica/invariants.hpp"
#include "extactica/parse.hpp"
#include "extactica/report.hpp"
#include "extactica/vector_field.hpp"

namespace extactica::cli {

using nlohmann::json;

namespace {

// Bad flag values or unreadable inputs; reported with exit code 1.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  // "-" is standard input (read once, shared), a leading '{' or '[' is
  // inline content, anything else a file path.
  std::string read(const std::string& source) {
    if (source == "-") {
      if (!stdin_) {
        std::ostringstream s;
        s << in_.rdbuf();
        stdin_ = s.str();
      }
      return *stdin_;
    }
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
    std::ifstream file(source, std::ios::binary);
    if (!file) throw UsageError("io", "cannot read '" + source + "'");
    std::ostringstream s;
    s << file.rdbuf();
    return s.str();
  }

  VectorField field(const std::string& source) { return VectorField::from_parsed(parse_vector_field(read(source))); }

 private:
  std::istream& in_;
  std::optional<std::string> stdin_;
};

std::vector<Rational> parse_point(const std::string& text, std::size_t expected) {
  std::vector<Rational> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    try {
      out.push_back(parse_rational(b == std::string::npos ? "" : item.substr(b, e - b + 1)));
    } catch (const std::exception&) {
      throw UsageError("usage", "invalid point coordinate '" + item + "'");
    }
  }
  if (out.size() != expected)
    throw UsageError("usage", "point needs " + std::to_string(expected) + " coordinates, got " +
                                  std::to_string(out.size()));
  return out;
}

LinearSystem parse_basis(const std::string& content, const VariableList& vars) {
  std::vector<MPoly> basis;
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '[') {
    json doc;
    try {
      doc = json::parse(content);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("basis JSON: ") + e.what(), 1, 1);
    }
    for (const auto& item : doc) {
      if (!item.is_string()) throw ParseError("basis JSON must be an array of polynomial strings", 1, 1);
      basis.push_back(parse_polynomial(item.get<std::string>(), vars));
    }
  } else {
    std::stringstream s(content);
    std::string line;
    while (std::getline(s, line)) {
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      basis.push_back(parse_polynomial(line, vars));
    }
  }
  return LinearSystem(std::move(basis));
}

std::map<std::string, Rational> point_map(const VectorField& field, const std::vector<Rational>& p) {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < p.size(); ++i) out[field.variables()[i]] = p[i];
  return out;
}

json point_json(const std::vector<Rational>& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

int binomial2(int m) { return (m + 2) * (m + 1) / 2; }

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "text")
    out << to_text(report);
  else
    out << report.dump(2) << "\n";
}

json error_json(const std::string& kind, const std::string& message) {
  json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extactic curves and invariant algebraic curves of polynomial vector fields", "extactica"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string field_src, field_x, field_y, basis_src, curve_text, point_text;
  int n = 1, dmax = 3, cap = -1, k_order = -1, degree = -1;

  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", field_src, "Field file, inline JSON or '-'")->required(); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Extactic order (default 1)")->check(CLI::PositiveNumber); };

  auto* extactic_cmd = app.add_subcommand("extactic", "E_n(X) for the degree-n monomial system");
  add_field(extactic_cmd);
  add_n(extactic_cmd);

  auto* system_cmd = app.add_subcommand("system", "Extactic of X with respect to a given linear system");
  add_field(system_cmd);
  system_cmd->add_option("--basis", basis_src, "Basis file (JSON array or one polynomial per line)")->required();

  auto* first_cmd = app.add_subcommand("first-integral", "Smallest d <= dmax with E_d(X) = 0");
  add_field(first_cmd);
  first_cmd->add_option("--dmax", dmax, "Largest degree to try (default 3)")->check(CLI::PositiveNumber);

  auto* invariance_cmd = app.add_subcommand("invariance", "Cofactor certificate X(F) = L F");
  add_field(invariance_cmd);
  invariance_cmd->add_option("--curve", curve_text, "Polynomial F")->required();

  auto* lines_cmd = app.add_subcommand("lines", "Rational invariant lines");
  add_field(lines_cmd);

  auto* through_cmd = app.add_subcommand("lines-through", "Rational invariant lines through a point");
  add_field(through_cmd);
  through_cmd->add_option("--point", point_text, "Projective point x,y,z")->required();

  auto* contact_cmd = app.add_subcommand("contact", "Contact order of a curve with the field at a point");
  add_field(contact_cmd);
  contact_cmd->add_option("--curve", curve_text, "Polynomial s")->required();
  contact_cmd->add_option("--point", point_text, "Point coordinates")->required();
  contact_cmd->add_option("--cap", cap, "Largest order tried (default 4 * dim of degree-deg(s) curves)")
      ->check(CLI::NonNegativeNumber);

  auto* ideal_cmd = app.add_subcommand("ideal", "Extactic ideal generators");
  add_field(ideal_cmd);
  add_n(ideal_cmd);
  ideal_cmd->add_option("--basis", basis_src, "Basis file; defaults to the degree-n monomials");
  ideal_cmd->add_option("--K", k_order, "Largest derivative order (default dim V - 1)")->check(CLI::NonNegativeNumber);

  auto* bounds_cmd = app.add_subcommand("bounds", "Counting bounds for degree d and curve degree n");
  bounds_cmd->add_option("--d", degree, "Field degree")->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--field", field_src, "Take the degree from this field");
  add_n(bounds_cmd);

  auto* family_cmd = app.add_subcommand("family", "Analysis of E_n(sX + tY)");
  family_cmd->add_option("--fieldX", field_x, "First field")->required();
  family_cmd->add_option("--fieldY", field_y, "Second field")->required();
  add_n(family_cmd);

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr) {
    emit(error_json("usage", "unknown verb '" + args[0] + "'"), format, out);
    err << "run with --help for usage\n";
    return usage_error;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    emit(error_json("usage", e.what()), format, out);
    err << "run with --help for usage\n";
    return usage_error;
  }

  Inputs inputs(in);
  try {
    json report;
    CLI::App* verb = app.get_subcommands().front();
    report["verb"] = verb->get_name();

    if (verb == extactic_cmd) {
      const VectorField field = inputs.field(field_src);
      report.update(to_json(extactic(field, n)));
      report["n"] = n;
      report["field_degree"] = field.degree();
    } else if (verb == system_cmd) {
      const VectorField field = inputs.field(field_src);
      const LinearSystem system = parse_basis(inputs.read(basis_src), field.ring_variables());
      report.update(to_json(extactic_system(field, system)));
    } else if (verb == first_cmd) {
      const VectorField field = inputs.field(field_src);
      const auto d = first_integral_degree(field, dmax);
      report["dmax"] = dmax;
      report["d"] = d ? json(*d) : json(nullptr);
    } else if (verb == invariance_cmd) {
      const VectorField field = inputs.field(field_src);
      report.update(to_json(invariance_cofactor(field, parse_polynomial(curve_text, field.ring_variables()))));
    } else if (verb == lines_cmd) {
      const VectorField field = inputs.field(field_src);
      const auto lines = invariant_lines(field);
      report["lines"] = to_json(lines);
      report["count"] = lines.size();
      report["bound"] = 3 * field.degree();
    } else if (verb == through_cmd) {
      const VectorField field = inputs.field(field_src);
      const auto p = parse_point(point_text, 3);
      const auto lines = invariant_lines_through_point(field, {p[0], p[1], p[2]});
      report["point"] = point_json(p);
      report["lines"] = to_json(lines);
      report["count"] = lines.size();
      report["bound"] = field.degree() + 1;
    } else if (verb == contact_cmd) {
      const VectorField field = inputs.field(field_src);
      const MPoly s = parse_polynomial(curve_text, field.ring_variables());
      const auto p = parse_point(point_text, field.dimension());
      const int used_cap = cap >= 0 ? cap : 4 * binomial2(std::max(s.degree(), 0));
      report["point"] = point_json(p);
      report["curve"] = render(s);
      report.update(to_json(contact_order(s, field, point_map(field, p), used_cap)));
    } else if (verb == ideal_cmd) {
      const VectorField field = inputs.field(field_src);
      const LinearSystem system = basis_src.empty() ? monomial_basis(n, field.variables())
                                                    : parse_basis(inputs.read(basis_src), field.ring_variables());
      const int k = k_order >= 0 ? k_order : static_cast<int>(system.dim()) - 1;
      const auto generators = extactic_ideal_generators(field, system, k);
      report["system"] = to_json(system);
      report["K"] = k;
      report["generators"] = to_json(generators);
      report["count"] = generators.size();
    } else if (verb == bounds_cmd) {
      if (degree < 0 && field_src.empty()) throw UsageError("usage", "bounds needs --d or --field");
      if (degree < 0) degree = inputs.field(field_src).degree();
      report.update(bounds_json(degree, n));
    } else if (verb == family_cmd) {
      const VectorField x = inputs.field(field_x);
      const VectorField y = inputs.field(field_y);
      report.update(to_json(family_analysis(x, y, n)));
    }
    emit(report, format, out);
    return ok;
  } catch (const UsageError& e) {
    emit(error_json(e.kind(), e.what()), format, out);
    return usage_error;
  } catch (const ParseError& e) {
    json j = error_json(e.kind(), e.message());
    j["error"]["line"] = e.line();
    j["error"]["column"] = e.column();
    emit(j, format, out);
    return usage_error;
  } catch (const Error& e) {
    emit(error_json(e.kind(), e.what()), format, out);
    return computation_error;
  } catch (const std::exception& e) {
    emit(error_json("internal", e.what()), format, out);
    return computation_error;
  }
}

}  // namespace extactica::cli
