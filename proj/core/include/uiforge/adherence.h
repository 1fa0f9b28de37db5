#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "uiforge/color.h"
#include "uiforge/constraints.h"
#include "uiforge/css.h"
#include "uiforge/html.h"

namespace uiforge {

enum class ConstraintClass { kColors, kFonts, kDevice, kLogo };
inline constexpr std::array<ConstraintClass, 4> kAllConstraintClasses = {
    ConstraintClass::kColors, ConstraintClass::kFonts, ConstraintClass::kDevice,
    ConstraintClass::kLogo};
std::string_view to_string(ConstraintClass c);  // "colors", "fonts", "device", "logo"

struct ClassScore {
  std::size_t correct = 0;
  std::size_t total = 0;
  // Constraint values that were not honored (colors/fonts as given, or a
  // short reason for device/logo).
  std::vector<std::string> misses;

  bool applicable() const { return total > 0; }
  std::optional<double> percent() const;
  ClassScore& operator+=(const ClassScore& other);
};

// "100.0%", or "n/a" when nothing was applicable.
std::string format_percent(const ClassScore& score);
std::string format_percent(std::optional<double> percent);

struct AdherenceReport {
  std::string design_id;
  std::map<ConstraintClass, ClassScore> scores;
  std::string evaluated_at;

  const ClassScore& score(ConstraintClass c) const;
};

// What the evaluator knows about the design besides its markup.
struct EvaluationContext {
  std::string design_id;
  Viewport declared_viewport;  // viewport recorded with the design
  // Accepted logo references: the asset URL and, when the bytes are at hand,
  // its data: URL.
  std::vector<std::string> logo_refs;
};

// Parsed markup plus everything extracted from its styles and scripts.
class DesignSource {
 public:
  // Throws Error(kParseError) when the markup cannot be parsed.
  static DesignSource parse(std::string_view html);

  const HtmlDocument& document() const { return doc_; }
  const std::set<Rgb>& colors() const { return colors_; }
  const std::set<std::string>& imported_fonts() const { return imported_fonts_; }  // normalized
  const std::set<std::string>& used_fonts() const { return used_fonts_; }          // normalized

  // Width constraints (px) on an element from every styling source that
  // applies at `viewport_width`. Non-pixel values are not reported.
  std::vector<double> declared_widths(int element, int viewport_width) const;

 private:
  explicit DesignSource(HtmlDocument doc) : doc_(std::move(doc)) {}
  void collect();

  HtmlDocument doc_;
  std::vector<Stylesheet> sheets_;
  std::set<Rgb> colors_;
  std::set<std::string> imported_fonts_;
  std::set<std::string> used_fonts_;
};

ClassScore check_colors(const DesignSource& src, const std::vector<std::string>& colors);
ClassScore check_fonts(const DesignSource& src, const std::vector<std::string>& fonts);
ClassScore check_device(const DesignSource& src, Device device, const Viewport& declared);
ClassScore check_logo(const DesignSource& src, const std::vector<std::string>& logo_refs,
                      bool logo_requested);

// Scores all four classes. A design whose markup does not parse scores zero
// on every applicable class rather than throwing.
AdherenceReport evaluate(std::string_view html, const ConstraintSet& cs,
                         const EvaluationContext& ctx);

// Top-level containers used by the device check: html, body and body's
// element children that render.
std::vector<int> root_containers(const HtmlDocument& doc);

// Family names carried by a fonts-service stylesheet URL (css and css2 APIs).
std::vector<std::string> font_service_families(std::string_view url);

}  // namespace uiforge
