#pragma once

#include <nlohmann/json.hpp>

#include "uiforge/constraints.h"

namespace uiforge::detail {

nlohmann::ordered_json settings_to_json(const ConstraintSet& cs);

// Decodes a settings object (already parsed). Throws as import_settings does.
ConstraintSet settings_from_json(const nlohmann::json& doc);

}  // namespace uiforge::detail
