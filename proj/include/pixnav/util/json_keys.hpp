#pragma once

#include <initializer_list>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "pixnav/util/error.hpp"

namespace pixnav {

// Throws ValidationError naming every key of `j` not in `known`.
inline void require_known_keys(const nlohmann::json& j, std::initializer_list<std::string_view> known,
                               const std::string& context) {
  if (!j.is_object()) throw ValidationError(context + ": expected a JSON object");
  std::string bad;
  for (const auto& [k, v] : j.items()) {
    bool found = false;
    for (auto name : known) found = found || name == k;
    if (!found) bad += (bad.empty() ? "" : ", ") + k;
  }
  if (!bad.empty()) throw ValidationError(context + ": unknown keys: " + bad);
}

}  // namespace pixnav
