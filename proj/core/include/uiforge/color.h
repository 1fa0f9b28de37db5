#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uiforge {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  std::string hex() const;  // "#RRGGBB"
  friend auto operator<=>(const Rgb&, const Rgb&) = default;
};

// "#RGB", "#RGBA", "#RRGGBB", "#RRGGBBAA" (alpha ignored), any case.
std::optional<Rgb> parse_hex_color(std::string_view text);

// rgb()/rgba() with integer-valued channels, comma or space separated.
std::optional<Rgb> parse_rgb_function(std::string_view text);

// Hex or rgb() form.
std::optional<Rgb> parse_css_color(std::string_view text);

// Every hex token and rgb()/rgba() call inside a CSS value or other text.
std::vector<Rgb> find_colors(std::string_view text);

// Default utility palette: "red-500" -> #EF4444, "white", "black".
std::optional<Rgb> tailwind_palette_color(std::string_view name);

// Utility prefixes whose argument is a color ("bg", "text", "border", ...).
bool is_color_utility_prefix(std::string_view prefix);

// Resolves a utility class token to the color it applies, if any: variant
// prefixes ("hover:") and opacity suffixes ("/50") are stripped, bracketed
// arbitrary values ("bg-[#2C3E50]") are parsed, and names are looked up in
// `custom` (flattened config colors) before the default palette.
std::optional<Rgb> utility_class_color(std::string_view token,
                                       const std::map<std::string, Rgb>& custom = {});

}  // namespace uiforge
