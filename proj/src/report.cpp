#include "extactica/report.hpp"

#include <algorithm>
#include <sstream>

#include "extactica/parse.hpp"

namespace extactica {

using nlohmann::json;

namespace {

json rendered(const std::vector<MPoly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(render(p));
  return out;
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << prefix << ": {}\n";
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (scalars) {
      out << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

json to_json(const LinearSystem& system) {
  json j;
  j["basis"] = rendered(system.basis());
  j["dim"] = system.dim();
  j["degree"] = system.degree() ? json(*system.degree()) : json(nullptr);
  return j;
}

json to_json(const ExtacticReport& report) {
  json j;
  j["polynomial"] = render(report.polynomial);
  j["system"] = to_json(report.system);
  j["expected_degree"] = report.expected_degree;
  j["vanished"] = report.vanished;
  j["row_degrees"] = report.row_degrees;
  return j;
}

json to_json(const Cofactor& cofactor) {
  json j;
  j["curve"] = render(cofactor.curve);
  j["cofactor"] = cofactor.invariant ? json(render(cofactor.cofactor)) : json(nullptr);
  j["invariant"] = cofactor.invariant;
  return j;
}

json to_json(const std::vector<Cofactor>& cofactors) {
  json out = json::array();
  for (const auto& c : cofactors) out.push_back(to_json(c));
  return out;
}

json to_json(const ContactOrder& contact) {
  json j;
  j["value"] = contact.value ? json(*contact.value) : json(nullptr);
  j["cap"] = contact.cap;
  j["flat"] = contact.flat();
  return j;
}

json to_json(const std::vector<IdealGenerator>& generators) {
  json out = json::array();
  for (const auto& g : generators) {
    json j;
    j["orders"] = g.orders;
    j["polynomial"] = render(g.determinant);
    out.push_back(std::move(j));
  }
  return out;
}

json to_json(const FamilyReport& report) {
  json j;
  j["n"] = report.n;
  j["pencil_degree"] = report.pencil_degree;
  j["identically_zero"] = report.identically_zero;
  j["form_degree"] = report.form_degree;
  json forms = json::array();
  for (const auto& f : report.coefficient_forms) {
    json e;
    e["exponents"] = f.exponents;
    e["form"] = render(f.form);
    forms.push_back(std::move(e));
  }
  j["coefficient_forms"] = std::move(forms);
  j["gcd_form"] = render(report.gcd_form);
  json roots = json::array();
  for (const auto& r : report.rational_roots) roots.push_back({r.first.get_str(), r.second.get_str()});
  j["rational_roots"] = std::move(roots);
  j["degree_bound"] = report.identically_zero ? json(nullptr) : json(report.degree_bound);
  return j;
}

json bounds_json(std::int64_t d, std::int64_t n) {
  json j;
  j["d"] = d;
  j["n"] = n;
  j["solution_count_bound"] = solution_count_bound(d, n);
  j["curve_count_bound"] = curve_count_bound(d, n);
  j["curve_count_bound_exact"] = to_string(curve_count_bound_exact(d, n));
  j["jouanolou_bound"] = jouanolou_bound(d);
  j["jouanolou_bound_exact"] = to_string(jouanolou_bound_exact(d));
  j["field_extension_bound"] = field_extension_bound(d, n);
  return j;
}

std::string to_text(const json& report) {
  std::ostringstream out;
  flatten(report, "", out);
  return out.str();
}

}  // namespace extactica
