#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "uiforge/error.h"

namespace uiforge {

enum class Device { kDesktop, kMobile, kTablet };
enum class Style { k3D, kNeumorphism, kDarkMode, kMinimalism };
enum class DesignTheme { kMaterialDesign, kAppleDesign, kCarbonDesign, kAtlassianDesign };

// Wire names, as they appear in settings documents ("Desktop", "Dark Mode",
// "MaterialDesign").
std::string_view to_string(Device device);
std::string_view to_string(Style style);
std::string_view to_string(DesignTheme theme);
std::optional<Device> parse_device(std::string_view name);
std::optional<Style> parse_style(std::string_view name);
std::optional<DesignTheme> parse_design_theme(std::string_view name);

// Human-readable theme name ("Material Design").
std::string_view display_name(DesignTheme theme);

inline constexpr std::array<Device, 3> kAllDevices = {Device::kDesktop, Device::kMobile,
                                                      Device::kTablet};
inline constexpr std::array<Style, 4> kAllStyles = {Style::k3D, Style::kNeumorphism,
                                                    Style::kDarkMode, Style::kMinimalism};
inline constexpr std::array<DesignTheme, 4> kAllThemes = {
    DesignTheme::kMaterialDesign, DesignTheme::kAppleDesign, DesignTheme::kCarbonDesign,
    DesignTheme::kAtlassianDesign};

// CSS-pixel viewport a design is rendered into for its target device.
struct Viewport {
  int width = 0;
  int height = 0;
  friend bool operator==(const Viewport&, const Viewport&) = default;
};

Viewport viewport_for(Device device);

// Lockable constraint fields, in canonical (serialization) order.
enum class Field {
  kIndustry,
  kProductPurpose,
  kTargetAudience,
  kDevice,
  kScreenType,
  kColors,
  kFonts,
  kStyle,
  kDesignTheme,
  kLogo,
  kFeaturesText,
};

inline constexpr std::array<Field, 11> kAllFields = {
    Field::kIndustry, Field::kProductPurpose, Field::kTargetAudience, Field::kDevice,
    Field::kScreenType, Field::kColors, Field::kFonts, Field::kStyle,
    Field::kDesignTheme, Field::kLogo, Field::kFeaturesText};

std::string_view to_string(Field field);
std::optional<Field> parse_field(std::string_view name);

inline constexpr std::size_t kMaxColors = 5;
inline constexpr std::size_t kMaxFonts = 3;

struct ConstraintSet {
  std::string industry;
  std::string product_purpose;
  std::string target_audience;
  Device device = Device::kDesktop;
  std::string screen_type;
  std::vector<std::string> colors;
  std::vector<std::string> fonts;
  std::optional<Style> style;
  std::optional<DesignTheme> design_theme;
  std::optional<std::string> logo;  // stored-asset id
  std::string features_text;
  std::set<Field> locks;

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

// Returns one issue per violated invariant; empty when the set is valid.
std::vector<ValidationIssue> validate(const ConstraintSet& cs);

// Throws Error(kValidationFailed) carrying the issues when validate is non-empty.
void require_valid(const ConstraintSet& cs);

// "#abc" / "#AaBbCc" -> "#AABBCC". nullopt when not a 3- or 6-digit hex code
// with a leading '#'.
std::optional<std::string> normalize_hex_color(std::string_view text);

// Same set with every color in canonical uppercase 6-digit form. Colors that
// fail to parse are left untouched (validate reports them).
ConstraintSet normalized(ConstraintSet cs);

// Incoming values everywhere except fields locked in `current`, which keep
// current's value. The lock set always comes from `current`.
ConstraintSet merge_preserving_locks(const ConstraintSet& current,
                                     const ConstraintSet& incoming);

// Copies a single field's value from `from` into `to`.
void copy_field(Field field, const ConstraintSet& from, ConstraintSet& to);
bool field_equal(Field field, const ConstraintSet& a, const ConstraintSet& b);

}  // namespace uiforge
