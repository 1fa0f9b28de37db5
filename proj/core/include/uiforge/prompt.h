#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "uiforge/catalog.h"
#include "uiforge/constraints.h"

namespace uiforge {

// Design-system expansion texts, one data file per theme (<Theme>.txt).
class ThemeLibrary {
 public:
  ThemeLibrary() = default;
  static ThemeLibrary load(const std::filesystem::path& directory);

  void set(DesignTheme theme, std::string body);
  bool has(DesignTheme theme) const { return bodies_.count(theme) != 0; }

  // The data file's text (from "Name:" on), without trailing whitespace.
  const std::string& body(DesignTheme theme) const;

 private:
  std::map<DesignTheme, std::string> bodies_;
};

// Full expansion block: the instruction sentence naming the theme followed
// by the theme's data. Throws Error(kNotFound) for a theme with no data.
std::string expand_theme(const ThemeLibrary& themes, DesignTheme theme);

// The fixed system message.
const std::string& build_system_prompt();

enum class PresetOp { kResizeSmaller, kResizeLarger, kAlterColorScheme, kAlterTypography };

std::string_view to_string(PresetOp op);
std::optional<PresetOp> parse_preset_op(std::string_view name);
std::string_view preset_phrase(PresetOp op);

struct ModificationRequest {
  std::string target_selector;
  std::set<PresetOp> preset_ops;
  std::string free_text;

  bool valid() const { return !preset_ops.empty() || !free_text.empty(); }
  friend bool operator==(const ModificationRequest&, const ModificationRequest&) = default;
};

struct PromptAttachment {
  enum class Kind { kReferenceScreen, kLogo };
  Kind kind = Kind::kReferenceScreen;
  std::string id;  // reference screen id or stored-asset id

  friend bool operator==(const PromptAttachment&, const PromptAttachment&) = default;
};

struct PromptBundle {
  std::string system_text;
  std::string user_text;
  std::optional<PromptAttachment> attachment;  // grayscale reference screen
  std::optional<PromptAttachment> logo;        // uploaded logo image, sent alongside
  std::string fingerprint;
};

// SHA-256 over system ‖ user ‖ reference attachment id.
std::string prompt_fingerprint(std::string_view system_text, std::string_view user_text,
                               std::string_view attachment_id);

// Maps a stored-asset id to the URL placed on the "Logo URL" line.
using AssetUrlResolver = std::function<std::string(std::string_view asset_id)>;

// Assembles generation and edit prompts. Pure: no clock, randomness or I/O
// after construction.
class PromptBuilder {
 public:
  explicit PromptBuilder(ThemeLibrary themes, AssetUrlResolver logo_url = {});

  // The specification lines ("- Industry: ..."), one per field.
  std::string specification_block(const ConstraintSet& cs) const;

  PromptBundle build_user_prompt(const ConstraintSet& cs,
                                 const ReferenceScreen* reference) const;

  // Throws Error(kValidationFailed) for an empty document or a request with
  // neither preset ops nor free text.
  PromptBundle build_edit_prompt(std::string_view original_html,
                                 const ModificationRequest& request) const;

  const ThemeLibrary& themes() const { return themes_; }
  std::string logo_url(std::string_view asset_id) const;

 private:
  ThemeLibrary themes_;
  AssetUrlResolver logo_url_;
};

inline constexpr std::string_view kBasePrompt =
    "Your product manager has just requested a design with the specifications below. "
    "Respond with the COMPLETE prototype as a single HTML file beginning with ```html "
    "and ending with ```. Here is the specification for the design:";

inline constexpr std::string_view kReferenceScreenPrompt =
    "Here is an example UI screen on which your design should be based. But ignore the "
    "color, font, text, logo, and branding of the screen. Focus on the layout and structure "
    "of the screens and the UI elements on the screen.";

}  // namespace uiforge
