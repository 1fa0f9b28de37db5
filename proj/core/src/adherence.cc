#include "uiforge/adherence.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "tailwind_config.h"
#include "uiforge/clock.h"
#include "uiforge/error.h"

namespace uiforge {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::string percent_decode(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+') {
      out.push_back(' ');
    } else if (s[i] == '%' && i + 2 < s.size() && std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
               std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
      out.push_back(static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16)));
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

// Splits "md:hover:w-[10px]" into ({"md", "hover"}, "w-[10px]"), ignoring
// colons inside brackets.
std::pair<std::vector<std::string_view>, std::string_view> split_variants(std::string_view token) {
  std::vector<std::string_view> variants;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] == '[') ++depth;
    if (token[i] == ']') --depth;
    if (token[i] == ':' && depth == 0) {
      variants.push_back(token.substr(start, i - start));
      start = i + 1;
    }
  }
  std::string_view base = token.substr(start);
  if (!base.empty() && base.front() == '!') base.remove_prefix(1);
  return {variants, base};
}

// Responsive variant minimum widths of the default utility framework.
std::optional<int> breakpoint_min(std::string_view variant) {
  if (variant == "sm") return 640;
  if (variant == "md") return 768;
  if (variant == "lg") return 1024;
  if (variant == "xl") return 1280;
  if (variant == "2xl") return 1536;
  return std::nullopt;
}

std::vector<std::string> bracket_font_list(std::string_view inner) {
  std::string s(inner);
  std::replace(s.begin(), s.end(), '_', ' ');
  return parse_font_family_list(s);
}

std::optional<double> px_value(std::string_view value) {
  value = trim(value);
  if (value.size() < 3 || lower(value.substr(value.size() - 2)) != "px") return std::nullopt;
  std::string num(trim(value.substr(0, value.size() - 2)));
  if (num.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(num.c_str(), &end);
  if (end != num.c_str() + num.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

bool is_fonts_service(std::string_view url) {
  return url.find("fonts.googleapis.com") != std::string_view::npos ||
         url.find("fonts.bunny.net") != std::string_view::npos;
}

// Simple selector compound against one element: tag, #id, .class, [attr] and
// [attr=value].
bool compound_matches(std::string_view compound, const HtmlElement& el) {
  std::size_t i = 0;
  auto read_ident = [&] {
    std::size_t start = i;
    while (i < compound.size() &&
           (std::isalnum(static_cast<unsigned char>(compound[i])) || compound[i] == '-' ||
            compound[i] == '_' || compound[i] == '\\')) {
      if (compound[i] == '\\' && i + 1 < compound.size()) ++i;
      ++i;
    }
    std::string out;
    for (std::size_t k = start; k < i; ++k) {
      if (compound[k] == '\\') continue;
      out.push_back(compound[k]);
    }
    return out;
  };
  if (i < compound.size() && compound[i] == '*') {
    ++i;
  } else if (i < compound.size() && std::isalpha(static_cast<unsigned char>(compound[i]))) {
    if (lower(read_ident()) != el.tag) return false;
  }
  std::vector<std::string> classes = el.classes();
  while (i < compound.size()) {
    char c = compound[i++];
    if (c == '.') {
      std::string cls = read_ident();
      if (std::find(classes.begin(), classes.end(), cls) == classes.end()) return false;
    } else if (c == '#') {
      std::string id = read_ident();
      const std::string* have = el.attr("id");
      if (!have || *have != id) return false;
    } else if (c == '[') {
      std::size_t close = compound.find(']', i);
      if (close == std::string_view::npos) return false;
      std::string_view body = compound.substr(i, close - i);
      i = close + 1;
      std::size_t eq = body.find('=');
      std::string name = lower(trim(body.substr(0, eq)));
      const std::string* have = el.attr(name);
      if (!have) return false;
      if (eq != std::string_view::npos) {
        if (eq > 0 && std::string_view("~|^$*").find(body[eq - 1]) != std::string_view::npos) {
          continue;  // operator forms: presence only
        }
        std::string_view want = trim(body.substr(eq + 1));
        if (want.size() >= 2 && (want.front() == '"' || want.front() == '\'')) {
          want = want.substr(1, want.size() - 2);
        }
        if (*have != want) return false;
      }
    } else {
      return false;
    }
  }
  return true;
}

void add_fonts(std::set<std::string>& into, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    std::string norm = normalize_font_name(n);
    if (!norm.empty()) into.insert(norm);
  }
}

void collect_declaration_fonts(const std::vector<CssDeclaration>& decls, std::set<std::string>& used) {
  for (const auto& d : decls) {
    if (d.property == "font-family") add_fonts(used, parse_font_family_list(d.value));
    if (d.property == "font") add_fonts(used, font_shorthand_families(d.value));
  }
}

bool is_renderable_child(std::string_view tag) {
  static constexpr std::string_view kSkip[] = {"script", "style", "noscript", "template",
                                               "link", "meta", "base", "title"};
  return std::find(std::begin(kSkip), std::end(kSkip), tag) == std::end(kSkip);
}

}  // namespace

std::string_view to_string(ConstraintClass c) {
  switch (c) {
    case ConstraintClass::kColors:
      return "colors";
    case ConstraintClass::kFonts:
      return "fonts";
    case ConstraintClass::kDevice:
      return "device";
    case ConstraintClass::kLogo:
      return "logo";
  }
  return "";
}

std::optional<double> ClassScore::percent() const {
  if (total == 0) return std::nullopt;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

ClassScore& ClassScore::operator+=(const ClassScore& other) {
  correct += other.correct;
  total += other.total;
  misses.insert(misses.end(), other.misses.begin(), other.misses.end());
  return *this;
}

std::string format_percent(std::optional<double> percent) {
  if (!percent) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", *percent);
  return buf;
}

std::string format_percent(const ClassScore& score) { return format_percent(score.percent()); }

const ClassScore& AdherenceReport::score(ConstraintClass c) const {
  static const ClassScore kEmpty;
  auto it = scores.find(c);
  return it == scores.end() ? kEmpty : it->second;
}

std::vector<std::string> font_service_families(std::string_view url) {
  std::vector<std::string> out;
  if (!is_fonts_service(url)) return out;
  std::size_t q = url.find('?');
  if (q == std::string_view::npos) return out;
  std::string query(url.substr(q + 1));
  // Markup-escaped separators survive in CSS text.
  for (std::size_t p; (p = query.find("&amp;")) != std::string::npos;) query.replace(p, 5, "&");
  for (std::string_view param : split(query, '&')) {
    if (param.substr(0, 7) != "family=") continue;
    std::string value = percent_decode(param.substr(7));
    for (std::string_view fam : split(value, '|')) {
      std::string_view name = fam.substr(0, fam.find(':'));
      name = trim(name);
      if (!name.empty()) out.emplace_back(name);
    }
  }
  return out;
}

std::vector<int> root_containers(const HtmlDocument& doc) {
  std::vector<int> out;
  int html = doc.first("html");
  int body = doc.first("body");
  if (html >= 0) out.push_back(html);
  if (body >= 0) {
    out.push_back(body);
    for (int child : doc.element(body).children) {
      if (is_renderable_child(doc.element(child).tag)) out.push_back(child);
    }
  }
  return out;
}

DesignSource DesignSource::parse(std::string_view html) {
  DesignSource src(HtmlDocument::parse(html));
  src.collect();
  return src;
}

void DesignSource::collect() {
  detail::TailwindConfig config;
  for (const auto& el : doc_.elements()) {
    if (el.tag == "style") sheets_.push_back(parse_stylesheet(el.raw_text));
    if (el.tag == "script" && el.raw_text.find("tailwind.config") != std::string::npos) {
      auto parsed = detail::parse_tailwind_config(el.raw_text);
      config.colors.merge(parsed.colors);
      config.font_families.merge(parsed.font_families);
    }
  }

  for (const auto& sheet : sheets_) {
    for (const auto& rule : sheet.rules) {
      for (const auto& d : rule.declarations) {
        for (const auto& c : find_colors(d.value)) colors_.insert(c);
      }
      collect_declaration_fonts(rule.declarations, used_fonts_);
    }
    for (const auto& url : sheet.imports) add_fonts(imported_fonts_, font_service_families(url));
    for (const auto& face : sheet.font_faces) {
      for (const auto& d : face) {
        if (d.property == "font-family") add_fonts(imported_fonts_, parse_font_family_list(d.value));
      }
    }
  }

  static constexpr std::string_view kColorAttributes[] = {
      "bgcolor", "color", "fill", "stroke", "stop-color", "flood-color", "lighting-color",
      "text", "link", "vlink", "alink"};
  for (const auto& el : doc_.elements()) {
    if (const auto* style = el.attr("style")) {
      auto decls = parse_declarations(*style);
      for (const auto& d : decls) {
        for (const auto& c : find_colors(d.value)) colors_.insert(c);
      }
      collect_declaration_fonts(decls, used_fonts_);
    }
    for (auto name : kColorAttributes) {
      if (const auto* v = el.attr(name)) {
        if (auto c = parse_css_color(trim(*v))) colors_.insert(*c);
      }
    }
    if (el.tag == "meta") {
      const auto* name = el.attr("name");
      const auto* content = el.attr("content");
      if (name && content && lower(*name) == "theme-color") {
        if (auto c = parse_css_color(trim(*content))) colors_.insert(*c);
      }
    }
    if (el.tag == "link") {
      if (const auto* href = el.attr("href")) add_fonts(imported_fonts_, font_service_families(*href));
    }
    if (el.tag == "font") {
      if (const auto* face = el.attr("face")) add_fonts(used_fonts_, parse_font_family_list(*face));
    }
    for (const auto& token : el.classes()) {
      if (auto c = utility_class_color(token, config.colors)) colors_.insert(*c);
      auto [variants, base] = split_variants(token);
      if (base.substr(0, 6) == "font-[" && base.back() == ']') {
        add_fonts(used_fonts_, bracket_font_list(base.substr(6, base.size() - 7)));
      } else if (base.substr(0, 5) == "font-") {
        auto it = config.font_families.find(std::string(base.substr(5)));
        if (it != config.font_families.end()) add_fonts(used_fonts_, it->second);
      }
    }
  }
  // The framework's base layer applies the sans stack to the whole page.
  if (auto it = config.font_families.find("sans"); it != config.font_families.end()) {
    add_fonts(used_fonts_, it->second);
  }
}

std::vector<double> DesignSource::declared_widths(int element, int viewport_width) const {
  std::vector<double> out;
  const HtmlElement& el = doc_.element(element);
  auto take = [&](const std::vector<CssDeclaration>& decls) {
    for (const auto& d : decls) {
      if (d.property != "width" && d.property != "min-width") continue;
      if (auto px = px_value(d.value)) out.push_back(*px);
    }
  };
  if (const auto* style = el.attr("style")) take(parse_declarations(*style));
  for (const auto& sheet : sheets_) {
    for (const auto& rule : sheet.rules) {
      if (!media_matches_width(rule.media, viewport_width)) continue;
      auto subjects = selector_subjects(rule.selector);
      bool hit = std::any_of(subjects.begin(), subjects.end(),
                             [&](const std::string& s) { return compound_matches(s, el); });
      if (hit) take(rule.declarations);
    }
  }
  for (const auto& token : el.classes()) {
    auto [variants, base] = split_variants(token);
    bool active = true;
    for (auto v : variants) {
      if (auto bp = breakpoint_min(v); bp && viewport_width < *bp) active = false;
    }
    if (!active) continue;
    for (std::string_view prefix : {std::string_view("w-["), std::string_view("min-w-[")}) {
      if (base.substr(0, prefix.size()) == prefix && base.back() == ']') {
        if (auto px = px_value(base.substr(prefix.size(), base.size() - prefix.size() - 1))) {
          out.push_back(*px);
        }
      }
    }
  }
  if (const auto* width = el.attr("width")) {
    std::string_view w = trim(*width);
    if (!w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      out.push_back(std::strtod(std::string(w).c_str(), nullptr));
    } else if (auto px = px_value(w)) {
      out.push_back(*px);
    }
  }
  return out;
}

ClassScore check_colors(const DesignSource& src, const std::vector<std::string>& colors) {
  ClassScore score;
  for (const auto& color : colors) {
    ++score.total;
    auto rgb = parse_hex_color(color);
    if (rgb && src.colors().count(*rgb)) {
      ++score.correct;
    } else {
      score.misses.push_back(color);
    }
  }
  return score;
}

ClassScore check_fonts(const DesignSource& src, const std::vector<std::string>& fonts) {
  ClassScore score;
  for (const auto& font : fonts) {
    ++score.total;
    std::string norm = normalize_font_name(font);
    if (src.imported_fonts().count(norm) && src.used_fonts().count(norm)) {
      ++score.correct;
    } else {
      score.misses.push_back(font);
    }
  }
  return score;
}

ClassScore check_device(const DesignSource& src, Device device, const Viewport& declared) {
  ClassScore score;
  score.total = 1;
  Viewport want = viewport_for(device);
  if (declared != want) {
    score.misses.push_back("declared viewport " + std::to_string(declared.width) + "x" +
                           std::to_string(declared.height) + " does not match " +
                           std::string(to_string(device)));
    return score;
  }
  const auto& doc = src.document();
  for (int el : root_containers(doc)) {
    for (double w : src.declared_widths(el, want.width)) {
      if (w > want.width) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%gpx", w);
        score.misses.push_back(doc.element(el).tag + " fixed at " + buf + " exceeds " +
                               std::to_string(want.width) + "px");
        return score;
      }
    }
  }
  score.correct = 1;
  return score;
}

ClassScore check_logo(const DesignSource& src, const std::vector<std::string>& logo_refs,
                      bool logo_requested) {
  ClassScore score;
  if (!logo_requested) return score;
  score.total = 1;
  auto matches = [&](const std::string* v) {
    if (!v) return false;
    std::string_view t = trim(*v);
    return std::find(logo_refs.begin(), logo_refs.end(), t) != logo_refs.end();
  };
  for (const auto& el : src.document().elements()) {
    bool hit = false;
    if (el.tag == "img") hit = matches(el.attr("src"));
    if (el.tag == "input") {
      const auto* type = el.attr("type");
      hit = type && lower(*type) == "image" && matches(el.attr("src"));
    }
    if (el.tag == "image") hit = matches(el.attr("href")) || matches(el.attr("xlink:href"));
    if (hit) {
      score.correct = 1;
      return score;
    }
  }
  score.misses.push_back("logo not referenced");
  return score;
}

AdherenceReport evaluate(std::string_view html, const ConstraintSet& cs,
                         const EvaluationContext& ctx) {
  AdherenceReport report;
  report.design_id = ctx.design_id;
  report.evaluated_at = format_timestamp(std::chrono::system_clock::now());
  try {
    DesignSource src = DesignSource::parse(html);
    report.scores[ConstraintClass::kColors] = check_colors(src, cs.colors);
    report.scores[ConstraintClass::kFonts] = check_fonts(src, cs.fonts);
    report.scores[ConstraintClass::kDevice] = check_device(src, cs.device, ctx.declared_viewport);
    report.scores[ConstraintClass::kLogo] = check_logo(src, ctx.logo_refs, cs.logo.has_value());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParseError) throw;
    auto zero = [](std::size_t total) {
      ClassScore s;
      s.total = total;
      if (total) s.misses.push_back("markup does not parse");
      return s;
    };
    report.scores[ConstraintClass::kColors] = zero(cs.colors.size());
    report.scores[ConstraintClass::kFonts] = zero(cs.fonts.size());
    report.scores[ConstraintClass::kDevice] = zero(1);
    report.scores[ConstraintClass::kLogo] = zero(cs.logo ? 1 : 0);
  }
  return report;
}

}  // namespace uiforge
