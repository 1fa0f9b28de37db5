#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uiforge {

struct CssDeclaration {
  std::string property;  // lowercase
  std::string value;     // trimmed, "!important" removed
};

struct CssRule {
  std::string selector;
  std::vector<CssDeclaration> declarations;
  // Enclosing @media conditions, outermost first.
  std::vector<std::string> media;
};

struct Stylesheet {
  std::vector<CssRule> rules;
  std::vector<std::string> imports;  // @import URLs
  std::vector<std::vector<CssDeclaration>> font_faces;
};

// Error-tolerant: malformed input yields whatever rules could be recovered.
Stylesheet parse_stylesheet(std::string_view css);
std::vector<CssDeclaration> parse_declarations(std::string_view block);

// Family names of a font-family value, unquoted, generic families included.
std::vector<std::string> parse_font_family_list(std::string_view value);

// Family names at the tail of a `font` shorthand value.
std::vector<std::string> font_shorthand_families(std::string_view value);

// Lowercased, unquoted, whitespace-collapsed family name for comparisons.
std::string normalize_font_name(std::string_view name);

// True when no min-width/max-width (px) condition in `media` excludes a
// viewport of the given width. Unknown conditions are assumed to match.
bool media_matches_width(const std::vector<std::string>& media, int width);

// Last compound of each selector in a list, pseudo-classes removed.
// Selectors ending in a pseudo-element are dropped.
std::vector<std::string> selector_subjects(std::string_view selector_list);

}  // namespace uiforge
