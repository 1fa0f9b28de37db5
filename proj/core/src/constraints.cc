#include "uiforge/constraints.h"

#include <algorithm>
#include <cctype>

namespace uiforge {
namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> parse_enum(std::string_view name, const std::array<Enum, N>& all) {
  for (Enum value : all) {
    if (to_string(value) == name) return value;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
bool is_member(Enum value, const std::array<Enum, N>& all) {
  return std::find(all.begin(), all.end(), value) != all.end();
}

bool is_hex_digit(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string_view to_string(Device device) {
  switch (device) {
    case Device::kDesktop:
      return "Desktop";
    case Device::kMobile:
      return "Mobile";
    case Device::kTablet:
      return "Tablet";
  }
  return "";
}

std::string_view to_string(Style style) {
  switch (style) {
    case Style::k3D:
      return "3D";
    case Style::kNeumorphism:
      return "Neumorphism";
    case Style::kDarkMode:
      return "Dark Mode";
    case Style::kMinimalism:
      return "Minimalism";
  }
  return "";
}

std::string_view to_string(DesignTheme theme) {
  switch (theme) {
    case DesignTheme::kMaterialDesign:
      return "MaterialDesign";
    case DesignTheme::kAppleDesign:
      return "AppleDesign";
    case DesignTheme::kCarbonDesign:
      return "CarbonDesign";
    case DesignTheme::kAtlassianDesign:
      return "AtlassianDesign";
  }
  return "";
}

std::string_view display_name(DesignTheme theme) {
  switch (theme) {
    case DesignTheme::kMaterialDesign:
      return "Material Design";
    case DesignTheme::kAppleDesign:
      return "Apple Design";
    case DesignTheme::kCarbonDesign:
      return "Carbon Design";
    case DesignTheme::kAtlassianDesign:
      return "Atlassian Design";
  }
  return "";
}

std::optional<Device> parse_device(std::string_view name) {
  return parse_enum(name, kAllDevices);
}
std::optional<Style> parse_style(std::string_view name) {
  return parse_enum(name, kAllStyles);
}
std::optional<DesignTheme> parse_design_theme(std::string_view name) {
  return parse_enum(name, kAllThemes);
}

Viewport viewport_for(Device device) {
  switch (device) {
    case Device::kDesktop:
      return {1440, 900};
    case Device::kTablet:
      return {768, 1024};
    case Device::kMobile:
      return {390, 844};
  }
  return {1440, 900};
}

std::string_view to_string(Field field) {
  switch (field) {
    case Field::kIndustry:
      return "industry";
    case Field::kProductPurpose:
      return "product_purpose";
    case Field::kTargetAudience:
      return "target_audience";
    case Field::kDevice:
      return "device";
    case Field::kScreenType:
      return "screen_type";
    case Field::kColors:
      return "colors";
    case Field::kFonts:
      return "fonts";
    case Field::kStyle:
      return "style";
    case Field::kDesignTheme:
      return "design_theme";
    case Field::kLogo:
      return "logo";
    case Field::kFeaturesText:
      return "features_text";
  }
  return "";
}

std::optional<Field> parse_field(std::string_view name) {
  return parse_enum(name, kAllFields);
}

std::optional<std::string> normalize_hex_color(std::string_view text) {
  if (text.empty() || text.front() != '#') return std::nullopt;
  std::string_view digits = text.substr(1);
  if (digits.size() != 3 && digits.size() != 6) return std::nullopt;
  if (!std::all_of(digits.begin(), digits.end(), is_hex_digit)) return std::nullopt;
  std::string out = "#";
  for (char c : digits) {
    char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out.push_back(up);
    if (digits.size() == 3) out.push_back(up);
  }
  return out;
}

std::vector<ValidationIssue> validate(const ConstraintSet& cs) {
  std::vector<ValidationIssue> issues;
  if (cs.colors.size() > kMaxColors) {
    issues.push_back({"colors", IssueCode::kOutOfRange,
                      "at most " + std::to_string(kMaxColors) + " colors allowed, got " +
                          std::to_string(cs.colors.size())});
  }
  for (const auto& color : cs.colors) {
    if (!normalize_hex_color(color)) {
      issues.push_back({"colors", IssueCode::kMalformedColor,
                        "'" + color + "' is not a #RGB or #RRGGBB hex code"});
    }
  }
  if (cs.fonts.size() > kMaxFonts) {
    issues.push_back({"fonts", IssueCode::kOutOfRange,
                      "at most " + std::to_string(kMaxFonts) + " fonts allowed, got " +
                          std::to_string(cs.fonts.size())});
  }
  for (std::size_t i = 0; i < cs.fonts.size(); ++i) {
    const auto& font = cs.fonts[i];
    bool blank = std::all_of(font.begin(), font.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) {
      issues.push_back({"fonts", IssueCode::kOutOfRange,
                        "font #" + std::to_string(i + 1) + " is empty"});
    }
  }
  if (!is_member(cs.device, kAllDevices)) {
    issues.push_back({"device", IssueCode::kUnknownEnumValue, "device is not Desktop, Mobile or Tablet"});
  }
  if (cs.style && !is_member(*cs.style, kAllStyles)) {
    issues.push_back({"style", IssueCode::kUnknownEnumValue, "unknown style"});
  }
  if (cs.design_theme && !is_member(*cs.design_theme, kAllThemes)) {
    issues.push_back({"design_theme", IssueCode::kUnknownEnumValue, "unknown design theme"});
  }
  for (Field lock : cs.locks) {
    if (!is_member(lock, kAllFields)) {
      issues.push_back({"locks", IssueCode::kUnknownLockTarget, "lock names no known field"});
    }
  }
  return issues;
}

void require_valid(const ConstraintSet& cs) {
  auto issues = validate(cs);
  if (!issues.empty()) {
    throw Error(ErrorCode::kValidationFailed, "constraint set is invalid", std::move(issues));
  }
}

ConstraintSet normalized(ConstraintSet cs) {
  for (auto& color : cs.colors) {
    if (auto norm = normalize_hex_color(color)) color = *norm;
  }
  return cs;
}

void copy_field(Field field, const ConstraintSet& from, ConstraintSet& to) {
  switch (field) {
    case Field::kIndustry:
      to.industry = from.industry;
      break;
    case Field::kProductPurpose:
      to.product_purpose = from.product_purpose;
      break;
    case Field::kTargetAudience:
      to.target_audience = from.target_audience;
      break;
    case Field::kDevice:
      to.device = from.device;
      break;
    case Field::kScreenType:
      to.screen_type = from.screen_type;
      break;
    case Field::kColors:
      to.colors = from.colors;
      break;
    case Field::kFonts:
      to.fonts = from.fonts;
      break;
    case Field::kStyle:
      to.style = from.style;
      break;
    case Field::kDesignTheme:
      to.design_theme = from.design_theme;
      break;
    case Field::kLogo:
      to.logo = from.logo;
      break;
    case Field::kFeaturesText:
      to.features_text = from.features_text;
      break;
  }
}

bool field_equal(Field field, const ConstraintSet& a, const ConstraintSet& b) {
  switch (field) {
    case Field::kIndustry:
      return a.industry == b.industry;
    case Field::kProductPurpose:
      return a.product_purpose == b.product_purpose;
    case Field::kTargetAudience:
      return a.target_audience == b.target_audience;
    case Field::kDevice:
      return a.device == b.device;
    case Field::kScreenType:
      return a.screen_type == b.screen_type;
    case Field::kColors:
      return a.colors == b.colors;
    case Field::kFonts:
      return a.fonts == b.fonts;
    case Field::kStyle:
      return a.style == b.style;
    case Field::kDesignTheme:
      return a.design_theme == b.design_theme;
    case Field::kLogo:
      return a.logo == b.logo;
    case Field::kFeaturesText:
      return a.features_text == b.features_text;
  }
  return false;
}

ConstraintSet merge_preserving_locks(const ConstraintSet& current,
                                     const ConstraintSet& incoming) {
  ConstraintSet result = incoming;
  for (Field field : current.locks) copy_field(field, current, result);
  result.locks = current.locks;
  return result;
}

}  // namespace uiforge
