#include "uiforge/color.h"

#include <array>
#include <cctype>
#include <cmath>

namespace uiforge {
namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool is_word(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

std::optional<int> integer_channel(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  if (token.empty()) return std::nullopt;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(std::string(token), &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (used != token.size() || v != std::floor(v) || v < 0 || v > 255) return std::nullopt;
  return static_cast<int>(v);
}

constexpr std::string_view kColorPrefixes[] = {
    "bg",       "text",     "border",   "border-t", "border-r",    "border-b",
    "border-l", "border-x", "border-y", "from",     "via",         "to",
    "ring",     "fill",     "stroke",   "outline",  "decoration",  "accent",
    "caret",    "divide",   "placeholder", "shadow", "ring-offset"};

}  // namespace

std::string Rgb::hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out = "#";
  for (std::uint8_t v : {r, g, b}) {
    out.push_back(kDigits[v >> 4]);
    out.push_back(kDigits[v & 0x0F]);
  }
  return out;
}

std::optional<Rgb> parse_hex_color(std::string_view text) {
  if (text.empty() || text.front() != '#') return std::nullopt;
  std::string_view d = text.substr(1);
  for (char c : d) {
    if (hex_value(c) < 0) return std::nullopt;
  }
  auto pair = [&](std::size_t i) { return static_cast<std::uint8_t>(hex_value(d[i]) * 16 + hex_value(d[i + 1])); };
  auto single = [&](std::size_t i) { return static_cast<std::uint8_t>(hex_value(d[i]) * 17); };
  switch (d.size()) {
    case 3:
    case 4:
      return Rgb{single(0), single(1), single(2)};
    case 6:
    case 8:
      return Rgb{pair(0), pair(2), pair(4)};
    default:
      return std::nullopt;
  }
}

std::optional<Rgb> parse_rgb_function(std::string_view text) {
  std::string lowered;
  for (char c : text) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::string_view s = lowered;
  if (s.starts_with("rgba(")) {
    s.remove_prefix(5);
  } else if (s.starts_with("rgb(")) {
    s.remove_prefix(4);
  } else {
    return std::nullopt;
  }
  auto close = s.find(')');
  if (close == std::string_view::npos) return std::nullopt;
  s = s.substr(0, close);
  if (auto slash = s.find('/'); slash != std::string_view::npos) s = s.substr(0, slash);
  std::vector<std::string_view> parts;
  const bool commas = s.find(',') != std::string_view::npos;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    bool sep = i == s.size() || (commas ? s[i] == ',' : std::isspace(static_cast<unsigned char>(s[i])) != 0);
    if (!sep) continue;
    std::string_view part = s.substr(start, i - start);
    bool blank = true;
    for (char c : part) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) parts.push_back(part);
    start = i + 1;
  }
  if (parts.size() < 3 || parts.size() > 4) return std::nullopt;
  auto r = integer_channel(parts[0]);
  auto g = integer_channel(parts[1]);
  auto b = integer_channel(parts[2]);
  if (!r || !g || !b) return std::nullopt;
  return Rgb{static_cast<std::uint8_t>(*r), static_cast<std::uint8_t>(*g), static_cast<std::uint8_t>(*b)};
}

std::optional<Rgb> parse_css_color(std::string_view text) {
  if (auto c = parse_hex_color(text)) return c;
  return parse_rgb_function(text);
}

std::vector<Rgb> find_colors(std::string_view text) {
  std::vector<Rgb> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    // url(...) holds a resource path; "#" there starts a fragment.
    if ((c == 'u' || c == 'U') && (i == 0 || !is_word(text[i - 1])) && i + 4 <= text.size() &&
        (text.substr(i, 4) == "url(" || text.substr(i, 4) == "URL(")) {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) break;
      i = close;
      continue;
    }
    if (c == '#' && (i == 0 || std::isalnum(static_cast<unsigned char>(text[i - 1])) == 0)) {
      std::size_t j = i + 1;
      while (j < text.size() && hex_value(text[j]) >= 0) ++j;
      if (j < text.size() && is_word(text[j])) continue;  // "#abcxyz" is an id, not a color
      if (auto rgb = parse_hex_color(text.substr(i, j - i))) out.push_back(*rgb);
      i = j - 1;
    } else if ((c == 'r' || c == 'R') && (i == 0 || !is_word(text[i - 1]))) {
      std::string_view rest = text.substr(i);
      std::size_t close = rest.find(')');
      if (close == std::string_view::npos) continue;
      if (auto rgb = parse_rgb_function(rest.substr(0, close + 1))) {
        out.push_back(*rgb);
        i += close;
      }
    }
  }
  return out;
}

bool is_color_utility_prefix(std::string_view prefix) {
  for (auto p : kColorPrefixes) {
    if (p == prefix) return true;
  }
  return false;
}

std::optional<Rgb> utility_class_color(std::string_view token, const std::map<std::string, Rgb>& custom) {
  // Variants ("md:hover:") sit before the last ':' outside brackets.
  std::size_t bracket = token.find('[');
  std::size_t colon = token.substr(0, bracket).rfind(':');
  if (colon != std::string_view::npos) token.remove_prefix(colon + 1);
  if (!token.empty() && token.front() == '!') token.remove_prefix(1);

  bracket = token.find('[');
  if (bracket != std::string_view::npos) {
    // Opacity modifier after the arbitrary value: "bg-[#fff]/50".
    if (auto close = token.rfind(']'); close != std::string_view::npos && close + 1 < token.size() &&
                                       token[close + 1] == '/') {
      token = token.substr(0, close + 1);
    }
    if (bracket == 0 || token[bracket - 1] != '-' || token.back() != ']') return std::nullopt;
    std::string_view prefix = token.substr(0, bracket - 1);
    if (!is_color_utility_prefix(prefix)) return std::nullopt;
    std::string value(token.substr(bracket + 1, token.size() - bracket - 2));
    for (auto& ch : value) {
      if (ch == '_') ch = ' ';
    }
    return parse_css_color(value);
  }

  if (auto slash = token.find('/'); slash != std::string_view::npos) token = token.substr(0, slash);
  // Longest matching prefix first ("ring-offset-" before "ring-").
  for (std::size_t dash = token.find('-'); dash != std::string_view::npos; dash = token.find('-', dash + 1)) {
    std::string_view prefix = token.substr(0, dash);
    if (!is_color_utility_prefix(prefix)) continue;
    std::string name(token.substr(dash + 1));
    if (auto it = custom.find(name); it != custom.end()) return it->second;
    if (auto c = tailwind_palette_color(name)) return c;
  }
  return std::nullopt;
}

}  // namespace uiforge
