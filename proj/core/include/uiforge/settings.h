#pragma once

#include <string>
#include <string_view>

#include "uiforge/constraints.h"

namespace uiforge {

inline constexpr int kSettingsSchemaVersion = 1;

// Canonical settings document: fixed key order, two-space indentation,
// trailing newline. Throws Error(kValidationFailed) for an invalid set.
std::string export_settings(const ConstraintSet& cs);

// Parses a settings document. Unknown top-level keys are ignored; colors are
// normalized to "#RRGGBB". Throws Error(kParseError) with a byte offset for
// malformed JSON, Error(kParseError) for type mismatches, and
// Error(kValidationFailed) carrying the issues for constraint violations.
ConstraintSet import_settings(std::string_view document);

}  // namespace uiforge
