#pragma once

#include <cstdint>

#include "json.hpp"

#include "extactica/extactic.hpp"
#include "extactica/invariants.hpp"

namespace extactica {

/// JSON mirrors of the report types. Polynomials are rendered canonically,
/// rationals as "n" or "n/d" strings.
nlohmann::json to_json(const LinearSystem& system);
nlohmann::json to_json(const ExtacticReport& report);
nlohmann::json to_json(const Cofactor& cofactor);
nlohmann::json to_json(const std::vector<Cofactor>& cofactors);
nlohmann::json to_json(const ContactOrder& contact);
nlohmann::json to_json(const std::vector<IdealGenerator>& generators);
nlohmann::json to_json(const FamilyReport& report);
nlohmann::json bounds_json(std::int64_t d, std::int64_t n);

/// Flattens a JSON object to "key: value" lines; nested keys are joined
/// with '.', array elements indexed as key[i]. Keys come out sorted.
std::string to_text(const nlohmann::json& report);

}  // namespace extactica
