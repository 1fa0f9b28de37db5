#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "uiforge/color.h"

namespace uiforge::detail {

// Theme extensions declared in an inline `tailwind.config = {...}` script.
struct TailwindConfig {
  // Flattened color names: {primary: {DEFAULT: x, 500: y}} -> "primary", "primary-500".
  std::map<std::string, Rgb> colors;
  // fontFamily keys -> family lists.
  std::map<std::string, std::vector<std::string>> font_families;
};

// Reads every `colors` and `fontFamily` object found in the script text.
// Unparseable fragments are skipped.
TailwindConfig parse_tailwind_config(std::string_view script);

}  // namespace uiforge::detail
