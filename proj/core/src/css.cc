#include "uiforge/css.h"

#include <cctype>
#include <regex>

namespace uiforge {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string strip_comments(std::string_view css) {
  std::string out;
  out.reserve(css.size());
  for (std::size_t i = 0; i < css.size(); ++i) {
    if (css[i] == '/' && i + 1 < css.size() && css[i + 1] == '*') {
      std::size_t end = css.find("*/", i + 2);
      if (end == std::string_view::npos) break;
      i = end + 1;
      out.push_back(' ');
      continue;
    }
    out.push_back(css[i]);
  }
  return out;
}

// Index of the '}' matching the '{' at `open`, honoring strings; npos if none.
std::size_t matching_brace(std::string_view s, std::size_t open) {
  int depth = 0;
  char quote = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    char c = s[i];
    if (quote) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i;
    }
  }
  return std::string_view::npos;
}

// Splits on `sep` outside strings and parentheses.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int parens = 0;
  char quote = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (quote) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '(') {
      ++parens;
    } else if (c == ')') {
      if (parens > 0) --parens;
    } else if (c == sep && parens == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

std::string import_url(std::string_view rule) {
  rule = trim(rule);
  if (rule.starts_with("url(")) {
    auto close = rule.find(')');
    return unquote(rule.substr(4, close == std::string_view::npos ? std::string_view::npos : close - 4));
  }
  auto parts = split_top_level(rule, ' ');
  return parts.empty() ? std::string() : unquote(parts.front());
}

void parse_into(std::string_view css, Stylesheet& sheet, std::vector<std::string>& media) {
  std::size_t i = 0;
  while (i < css.size()) {
    while (i < css.size() && (is_space(css[i]) || css[i] == ';' || css[i] == '}')) ++i;
    if (i >= css.size()) break;
    std::size_t brace = css.find('{', i);
    std::size_t semi = css.find(';', i);
    if (css[i] == '@') {
      std::size_t name_end = i + 1;
      while (name_end < css.size() && (std::isalnum(static_cast<unsigned char>(css[name_end])) || css[name_end] == '-')) {
        ++name_end;
      }
      std::string name = lower(css.substr(i + 1, name_end - i - 1));
      if (semi != std::string_view::npos && (brace == std::string_view::npos || semi < brace)) {
        if (name == "import") sheet.imports.push_back(import_url(css.substr(name_end, semi - name_end)));
        i = semi + 1;
        continue;
      }
      if (brace == std::string_view::npos) break;
      std::size_t close = matching_brace(css, brace);
      if (close == std::string_view::npos) close = css.size();
      std::string_view inner = css.substr(brace + 1, close - brace - 1);
      if (name == "font-face") {
        sheet.font_faces.push_back(parse_declarations(inner));
      } else if (name == "media") {
        media.emplace_back(trim(css.substr(name_end, brace - name_end)));
        parse_into(inner, sheet, media);
        media.pop_back();
      } else if (name == "supports" || name == "layer" || name == "container" ||
                 name == "document") {
        parse_into(inner, sheet, media);
      }
      i = close + 1;
      continue;
    }
    if (brace == std::string_view::npos) break;
    std::size_t close = matching_brace(css, brace);
    if (close == std::string_view::npos) close = css.size();
    CssRule rule;
    rule.selector = std::string(trim(css.substr(i, brace - i)));
    rule.declarations = parse_declarations(css.substr(brace + 1, close - brace - 1));
    rule.media = media;
    sheet.rules.push_back(std::move(rule));
    i = close + 1;
  }
}

}  // namespace

std::vector<CssDeclaration> parse_declarations(std::string_view block) {
  std::vector<CssDeclaration> out;
  std::string clean = strip_comments(block);
  for (std::string_view part : split_top_level(clean, ';')) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos) continue;
    std::string property = lower(trim(part.substr(0, colon)));
    std::string_view value = trim(part.substr(colon + 1));
    if (auto bang = value.rfind('!'); bang != std::string_view::npos &&
                                      lower(trim(value.substr(bang + 1))) == "important") {
      value = trim(value.substr(0, bang));
    }
    if (property.empty()) continue;
    out.push_back({std::move(property), std::string(value)});
  }
  return out;
}

Stylesheet parse_stylesheet(std::string_view css) {
  Stylesheet sheet;
  std::string clean = strip_comments(css);
  std::vector<std::string> media;
  parse_into(clean, sheet, media);
  return sheet;
}

std::vector<std::string> parse_font_family_list(std::string_view value) {
  std::vector<std::string> out;
  for (std::string_view part : split_top_level(value, ',')) {
    std::string name = unquote(part);
    if (!name.empty()) out.push_back(std::move(name));
  }
  return out;
}

std::vector<std::string> font_shorthand_families(std::string_view value) {
  // Families follow the size token (which may carry "/line-height").
  static const std::regex size_token(
      R"((^|\s)(\d*\.?\d+(px|pt|em|rem|%|vw|vh|ex|ch)|xx-small|x-small|small|medium|large|x-large|xx-large|smaller|larger)(/\S+)?\s+)",
      std::regex::icase);
  std::string v(value);
  std::smatch m;
  if (!std::regex_search(v, m, size_token)) return {};
  return parse_font_family_list(v.substr(static_cast<std::size_t>(m.position(0) + m.length(0))));
}

std::string normalize_font_name(std::string_view name) {
  std::string unq = unquote(name);
  std::string out;
  bool space = false;
  for (char c : unq) {
    if (is_space(c) || c == '+' || c == '_') {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

bool media_matches_width(const std::vector<std::string>& media, int width) {
  static const std::regex min_w(R"(min-width\s*:\s*(\d+(?:\.\d+)?)px)", std::regex::icase);
  static const std::regex max_w(R"(max-width\s*:\s*(\d+(?:\.\d+)?)px)", std::regex::icase);
  for (const auto& condition : media) {
    std::smatch m;
    if (std::regex_search(condition, m, min_w) && std::stod(m[1]) > width) return false;
    if (std::regex_search(condition, m, max_w) && std::stod(m[1]) < width) return false;
  }
  return true;
}

std::vector<std::string> selector_subjects(std::string_view selector_list) {
  std::vector<std::string> out;
  for (std::string_view sel : split_top_level(selector_list, ',')) {
    sel = trim(sel);
    if (sel.empty()) continue;
    std::size_t cut = sel.find_last_of(" >+~");
    std::string_view last = cut == std::string_view::npos ? sel : sel.substr(cut + 1);
    if (last.find("::") != std::string_view::npos) continue;
    std::string compound;
    for (std::size_t i = 0; i < last.size(); ++i) {
      if (last[i] != ':') {
        compound.push_back(last[i]);
        continue;
      }
      std::size_t j = i + 1;
      while (j < last.size() && (std::isalnum(static_cast<unsigned char>(last[j])) || last[j] == '-')) ++j;
      // :root names the document element; other pseudo-classes are dropped.
      if (last.substr(i + 1, j - i - 1) == "root") compound += "html";
      if (j < last.size() && last[j] == '(') {
        int depth = 0;
        for (; j < last.size(); ++j) {
          if (last[j] == '(') ++depth;
          if (last[j] == ')' && --depth == 0) break;
        }
        ++j;
      }
      i = j - 1;
    }
    if (!compound.empty()) out.push_back(compound);
  }
  return out;
}

}  // namespace uiforge
