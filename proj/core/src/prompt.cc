#include "uiforge/prompt.h"

#include <sstream>

#include "uiforge/crypto.h"
#include "uiforge/error.h"

namespace uiforge {
namespace {

constexpr std::string_view kSystemPrompt =
    "You are an exceptional web designer and developer with millennia of experience in "
    "creating cutting-edge website prototypes. Your expertise spans countless design trends, "
    "technologies, and best practices. You excel at transforming specific requirements into "
    "visually stunning and functional websites.\n"
    "\n"
    "Carefully analyze the provided specifications, which may include:\n"
    "1. Industry: The industry or field the website is for\n"
    "2. Colors: Specific color codes to be used in the design\n"
    "3. Fonts: Typography choices for the website\n"
    "4. Device: The primary device the website is designed for (e.g., Desktop, Mobile)\n"
    "5. Design Theme: Any specified Design Theme to follow\n"
    "6. Screen Type: The specific page or screen to be designed (e.g., Home, About, Contact)\n"
    "7. Target Audience: The primary users the website is intended for\n"
    "8. Product Purpose: The main goal or function of the website\n"
    "\n"
    "When provided with an example UI screens:\n"
    "- Focus on the layout and structure of the elements\n"
    "- Ignore colors, fonts, text, logos, and branding unless they match the given "
    "specifications\n"
    "- Use the reference as a guide for element placement and overall composition\n"
    "\n"
    "Follow these guidelines when creating the code for the design:\n"
    "- Generate content for a fictional website or web application based on the given "
    "specifications\n"
    "- Use Tailwind CSS for styling via CDN (cdn.tailwindcss.com)\n"
    "- Implement custom CSS in a <style> tag when necessary\n"
    "- Write efficient JavaScript in a <script> tag\n"
    "- Import any required external dependencies from Unpkg\n"
    "- Utilize Google Fonts for typography as specified\n"
    "- Source images from https://placehold.co/ for placeholders (e.g., "
    "https://placehold.co/500x500)\n"
    "- Ensure the prototype is fully responsive and cross-browser compatible\n"
    "\n"
    "Provide your response as a single HTML file containing the complete, interactive "
    "prototype.";

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// "- Label: value", without a trailing space when the value is empty.
void spec_line(std::ostringstream& out, std::string_view label, std::string_view value) {
  out << "\n- " << label << ":";
  if (!value.empty()) out << " " << value;
}

}  // namespace

const std::string& build_system_prompt() {
  static const std::string text(kSystemPrompt);
  return text;
}

std::string_view to_string(PresetOp op) {
  switch (op) {
    case PresetOp::kResizeSmaller:
      return "resize-smaller";
    case PresetOp::kResizeLarger:
      return "resize-larger";
    case PresetOp::kAlterColorScheme:
      return "alter-color-scheme";
    case PresetOp::kAlterTypography:
      return "alter-typography";
  }
  return "";
}

std::optional<PresetOp> parse_preset_op(std::string_view name) {
  for (PresetOp op : {PresetOp::kResizeSmaller, PresetOp::kResizeLarger,
                      PresetOp::kAlterColorScheme, PresetOp::kAlterTypography}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

std::string_view preset_phrase(PresetOp op) {
  switch (op) {
    case PresetOp::kResizeSmaller:
      return "Make the selected element smaller";
    case PresetOp::kResizeLarger:
      return "Make the selected element larger";
    case PresetOp::kAlterColorScheme:
      return "Change the color scheme of the selected element";
    case PresetOp::kAlterTypography:
      return "Change the typography of the selected element";
  }
  return "";
}

std::string prompt_fingerprint(std::string_view system_text, std::string_view user_text,
                               std::string_view attachment_id) {
  std::string material;
  material.reserve(system_text.size() + user_text.size() + attachment_id.size());
  material.append(system_text).append(user_text).append(attachment_id);
  return sha256_hex(material);
}

PromptBuilder::PromptBuilder(ThemeLibrary themes, AssetUrlResolver logo_url)
    : themes_(std::move(themes)), logo_url_(std::move(logo_url)) {}

std::string PromptBuilder::logo_url(std::string_view asset_id) const {
  return logo_url_ ? logo_url_(asset_id) : std::string(asset_id);
}

std::string PromptBuilder::specification_block(const ConstraintSet& cs) const {
  std::ostringstream out;
  spec_line(out, "Industry", cs.industry);
  spec_line(out, "Product Purpose", cs.product_purpose);
  spec_line(out, "Target Audience", cs.target_audience);
  spec_line(out, "Device", to_string(cs.device));
  spec_line(out, "Screen Type", cs.screen_type);
  spec_line(out, "Colors", join(cs.colors, ", "));
  spec_line(out, "Fonts", join(cs.fonts, ", "));
  if (cs.style) spec_line(out, "Style", to_string(*cs.style));
  if (cs.logo) spec_line(out, "Logo URL", "Full: " + logo_url(*cs.logo));
  spec_line(out, "Others", cs.features_text);
  if (cs.design_theme) spec_line(out, "Design Theme", display_name(*cs.design_theme));
  // Drop the leading newline so the block starts with "- Industry:".
  return out.str().substr(1);
}

PromptBundle PromptBuilder::build_user_prompt(const ConstraintSet& cs,
                                              const ReferenceScreen* reference) const {
  PromptBundle bundle;
  bundle.system_text = build_system_prompt();

  std::string user(kBasePrompt);
  user += "\n";
  user += specification_block(cs);
  if (cs.design_theme) {
    user += "\n\n";
    user += expand_theme(themes_, *cs.design_theme);
  }
  if (reference) {
    user += "\n\n";
    user += kReferenceScreenPrompt;
    bundle.attachment = PromptAttachment{PromptAttachment::Kind::kReferenceScreen, reference->id};
  }
  if (cs.logo) bundle.logo = PromptAttachment{PromptAttachment::Kind::kLogo, *cs.logo};
  bundle.user_text = std::move(user);
  bundle.fingerprint = prompt_fingerprint(bundle.system_text, bundle.user_text,
                                          bundle.attachment ? bundle.attachment->id : "");
  return bundle;
}

PromptBundle PromptBuilder::build_edit_prompt(std::string_view original_html,
                                              const ModificationRequest& request) const {
  if (original_html.empty()) {
    throw Error(ErrorCode::kValidationFailed, "edit requires the original design document");
  }
  if (!request.valid()) {
    throw Error(ErrorCode::kValidationFailed,
                "modification request needs a preset operation or free text");
  }
  std::string user =
      "Here are changes requested by the user on a specific element in the design:\n"
      "Make the following changes:";
  for (PresetOp op : request.preset_ops) {
    user += "\n- ";
    user += preset_phrase(op);
  }
  if (!request.free_text.empty()) {
    user += "\n- ";
    user += request.free_text;
  }
  user += "\n- Selected element: ";
  user += request.target_selector;
  user += "\n\nThis is the original design\n- ";
  user += original_html;
  user += "\n\nPlease update the design accordingly.";

  PromptBundle bundle;
  bundle.system_text = build_system_prompt();
  bundle.user_text = std::move(user);
  bundle.fingerprint = prompt_fingerprint(bundle.system_text, bundle.user_text, "");
  return bundle;
}

}  // namespace uiforge
